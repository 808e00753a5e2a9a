"""All unit tests are defined here."""
