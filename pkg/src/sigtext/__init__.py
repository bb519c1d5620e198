"""sigtext: signal-to-text toolkit for machinery condition monitoring.

Synthesizes labeled vibration signals, denoises them by singular-spectrum
decomposition, extracts a time/frequency feature catalog, renders
standardized textual descriptions, and emits instruction-tuning Q&A
datasets plus diagnostic prompts.
"""

__version__ = "0.1.0"

from .signalio import SampledSignal, SampleGrid, load_signal, save_signal

__all__ = ["SampledSignal", "SampleGrid", "load_signal", "save_signal", "__version__"]
