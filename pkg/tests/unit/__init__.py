"""Unit tests for sepscan."""
