"""Tests for the Berger sphere eta engine."""
