"""Integration tests package for the detector-metrology command line"""
