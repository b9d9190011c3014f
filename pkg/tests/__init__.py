"""Test suite for the differential measurement error toolkit."""
