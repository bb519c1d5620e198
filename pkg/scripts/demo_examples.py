#!/usr/bin/env python3
"""Walk the two reference signals through the full describe pipeline.

Example A: 30 Hz simple harmonic, amplitude 4, zero phase, 1 kHz sampling.
Example B: 100 Hz fundamental with 2nd/3rd harmonics (4.02/0.689/0.344).
"""

from sigtext.describe import describe
from sigtext.generators import MultiHarmonicParams, single_harmonic, synth_multi_harmonic
from sigtext.signalio import SampleGrid


def main() -> None:
    print("=" * 72)
    print("Example A: single harmonic, A=4, f=30 Hz, phase=0, fs=1 kHz, 1 s")
    print("=" * 72)
    signal = single_harmonic(4.0, 30.0, 0.0, SampleGrid(1000.0, 1000))
    desc = describe(signal)
    print(f"classified as: {desc.kind.value}")
    print(desc.rendered_text)

    print()
    print("=" * 72)
    print("Example B: harmonics 100/200/300 Hz at 4.02/0.689/0.344 mm/sec")
    print("=" * 72)
    params = MultiHarmonicParams(100.0, (4.02, 0.689, 0.344))
    signal = synth_multi_harmonic(params, SampleGrid(10000.0, 10000))
    desc = describe(signal)
    print(f"classified as: {desc.kind.value}")
    print(desc.rendered_text)


if __name__ == "__main__":
    main()
