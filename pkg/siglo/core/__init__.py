"""Application-wide configuration and logging are located here."""
