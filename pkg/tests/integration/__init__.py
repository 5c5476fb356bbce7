"""Integration and acceptance tests for sepscan."""
