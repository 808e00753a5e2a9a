"""Version constants are defined here and should be updated on release."""

VERSION = "0.1.0"
LAST_UPDATE = "2026-10-16"
