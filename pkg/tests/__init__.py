"""Test package for radiolabel."""
