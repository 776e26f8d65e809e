"""Unit test package for kkclique."""
