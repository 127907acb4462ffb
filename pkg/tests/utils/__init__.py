"""Test utilities package for detector-metrology tests"""
