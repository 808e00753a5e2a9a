"""All tests for siglo are defined here."""
