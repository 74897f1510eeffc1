# Spectral engine package
