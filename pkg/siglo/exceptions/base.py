"""Head siglo exception class is defined here."""


class SigloError(Exception):
    """
    Base siglo exception to inherit from.
    User can redefine `get_exit_code` method and `__str__` as its value will be printed by the command line layer.
    """

    def __init__(self):
        super().__init__(str(self))

    def get_exit_code(self) -> int:
        """
        Return process exit code for the command line layer.
        Descendants should override this method, but it defaults to 1 - generic failure.
        """
        return 1

    def __str__(self) -> str:
        return "Unexpected error happened in siglo"
