"""Prometheus metrics definition is located here."""
