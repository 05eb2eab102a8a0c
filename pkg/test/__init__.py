# Test package for the ECIC Matroid System
