"""Simulated vibration signal generation."""

from __future__ import annotations

from ..signalio import DEFAULT_UNIT, SampleGrid, SampledSignal
from .expressions import (LiteralExpr, Operator, OpExpr, SignalExpr, UnitExpr,
                          add, apply_expr, convolve, divide, integrate,
                          multiply, power, subtract)
from .functions import (AmplitudeModulatedParams, CompositeParams, FunctionKind,
                        MultiHarmonicParams, RandomHarmonicsParams,
                        single_harmonic, synth_amplitude_modulated,
                        synth_composite, synth_function, synth_multi_harmonic,
                        synth_random_harmonics)
from .machines import (BearingFaultType, BearingParams, GearParams,
                       synth_bearing, synth_gear)
from .randomization import (GeneratorClass, ParamRanges, add_noise,
                            default_ranges, sample_noise_snr_db, sample_params)
from .streams import derive_rng
from .units import (AliasingError, HarmonicParams, ImpulseDecayParams,
                    MotherWavelet, NoiseKind, RandomUnitParams, UnitParams,
                    WaveletParams, eval_unit)

_SYNTH = {
    GeneratorClass.SINGLE_HARMONIC: lambda p, g, u: eval_unit(p, g, u),
    GeneratorClass.MULTI_HARMONIC: synth_multi_harmonic,
    GeneratorClass.RANDOM_HARMONIC: synth_random_harmonics,
    GeneratorClass.COMPOSITE_HARMONIC: synth_composite,
    GeneratorClass.AMPLITUDE_MODULATED: synth_amplitude_modulated,
    GeneratorClass.BEARING: synth_bearing,
    GeneratorClass.GEAR: synth_gear,
}


def synthesize(kind: GeneratorClass, params, grid: SampleGrid,
               unit: str = DEFAULT_UNIT) -> SampledSignal:
    """Generate a signal of the given class from concrete parameters."""
    return _SYNTH[GeneratorClass(kind)](params, grid, unit)
