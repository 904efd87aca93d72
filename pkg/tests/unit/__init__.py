"""Unit tests for the Berger sphere eta engine."""
