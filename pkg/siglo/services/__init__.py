"""Solver, experiment runner and validator services are located here."""
