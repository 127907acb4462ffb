"""Test package for the detector-metrology toolkit"""
