"""
Configuration settings for the frequency-domain CNN verification kit
"""
import os
from dotenv import load_dotenv

load_dotenv()

# Run Configuration
DEFAULT_SEED = int(os.getenv('FREQNET_SEED', '0'))
DEFAULT_FORMAT = os.getenv('FREQNET_FORMAT', 'csv')
DEFAULT_OUTPUT = os.getenv('FREQNET_OUTPUT', 'verification_report.csv')
LOG_LEVEL = os.getenv('FREQNET_LOG_LEVEL', 'WARNING')
WORKERS = int(os.getenv('FREQNET_WORKERS', '1'))

# Suites in registration order (report rows follow this order)
SUITES = {
    'dft': 'suites.dft_checks',
    'conv': 'suites.conv_checks',
    'activations': 'suites.activation_checks',
    'pooling': 'suites.pooling_checks',
    'loss': 'suites.loss_checks',
    'laplace': 'suites.laplace_checks',
    'bench': 'suites.bench_checks',
}

REPORT_FORMATS = ('csv', 'json')

# Composite Simpson quadrature
QUADRATURE_SETTINGS = {
    'panels': 64,
    'target_rel_tol': 1e-10,
    'panel_cap': 2 ** 20,
    'panel_cap_2d': 2 ** 11,   # per axis
}

# Gauss hypergeometric series
SERIES_SETTINGS = {
    'rel_tol': 1e-12,
    'max_terms': 100_000,
}

# Discrete transforms
FFT_SETTINGS = {
    'residue_tol': 1e-10,      # relative to max |coeff|
}

# Closed-form activations
ACTIVATION_SETTINGS = {
    'relu_crossover': 1e-4,    # |omega| * k below this uses the Taylor branch
    'pole_guard': 1e-8,
}

# Laplace transforms
LAPLACE_SETTINGS = {
    'tail_tol': 1e-10,
    'horizon_factor': 20.0,    # T >= horizon_factor / p
    'support_factor': 5.0,     # T >= support_factor * scale
    'horizon_cap_factor': 1024,
    'inner_panels': 128,       # fixed Simpson rule inside the convolution curve
    'theorem_rel_tol': 1e-8,
}

# Direct vs spectral convolution benchmark
BENCH_SETTINGS = {
    'sizes': [64, 256, 1024, 4096],
    'repetitions': 5,
    'gate_factor': 1e-10,      # agreement tolerance per output sample
}
