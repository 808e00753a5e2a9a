"""Helper utilities are defined here."""
