"""Test suite for sepscan."""
