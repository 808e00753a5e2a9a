"""Logic exceptions module."""
