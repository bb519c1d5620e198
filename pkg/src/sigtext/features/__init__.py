"""Time-domain, frequency-domain and spectrum-structure feature extraction."""

from .freq_domain import FreqStatFeatures, freq_features
from .harmonics import (CarrierBlock, HarmonicEntry, HarmonicSeries, Peak,
                        PeakList, SidebandPattern, Subharmonic,
                        detect_harmonics, detect_sidebands, harmonic_families,
                        spacing_line_amplitude, spacing_line_present, top_peaks)
from .spectral import (Spectrum, envelope, envelope_spectrum,
                       interpolate_peak_freq, significance_floor,
                       significant_peak_bins, spectrum)
from .time_domain import TimeFeatures, WaveFeatures, time_features, wave_features
