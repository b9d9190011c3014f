"""
Differential Measurement Error Sensitivity Analysis - Main Package
"""
