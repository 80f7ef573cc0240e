"""
Test suite for hyperck.
"""
