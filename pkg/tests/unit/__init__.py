"""Unit tests package for the detector-metrology toolkit"""
