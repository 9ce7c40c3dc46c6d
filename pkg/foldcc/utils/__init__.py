"""Helpers for the command line: grid parsing and report writing."""
