"""Experiment command line."""
