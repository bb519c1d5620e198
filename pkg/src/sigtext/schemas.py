"""Published JSON schemas for the toolkit's machine-readable outputs.

Consumers can validate CLI output and data files against these; the test
suite does exactly that.
"""

SIGNAL_CONTAINER_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["sample_rate_hz", "unit", "samples", "meta"],
    "properties": {
        "sample_rate_hz": {"type": "number", "exclusiveMinimum": 0},
        "unit": {"type": "string"},
        "samples": {"type": "array", "items": {"type": "number"}, "minItems": 2},
        "meta": {"type": "object"},
    },
}

DESCRIPTION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["kind", "rendered_text", "sections", "values"],
    "properties": {
        "kind": {"type": "string",
                 "enum": ["single_harmonic", "multi_harmonic", "random_harmonic",
                          "composite_harmonic", "amplitude_modulated", "unknown"]},
        "rendered_text": {"type": "string", "minLength": 1},
        "sections": {
            "type": "object",
            "required": ["composition", "time_quant", "freq_quant", "linking"],
            "additionalProperties": {"type": "string"},
        },
        "values": {"type": "object"},
    },
}

_NULLABLE_NUMBER = {"type": ["number", "null"]}

FEATURE_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["sample_rate_hz", "n_samples", "unit", "time", "frequency",
                 "wave", "harmonics", "sidebands", "peaks"],
    "properties": {
        "sample_rate_hz": {"type": "number"},
        "n_samples": {"type": "integer"},
        "unit": {"type": "string"},
        "time": {
            "type": "object",
            "required": ["rms", "mean", "kurtosis", "linear_kurtosis", "margin",
                         "min", "max", "peak_to_peak", "skewness",
                         "root_square_amplitude", "absolute_mean", "variance",
                         "waveform_indicator", "peak"],
            "properties": {name: _NULLABLE_NUMBER for name in
                           ("rms", "mean", "kurtosis", "linear_kurtosis", "margin",
                            "min", "max", "peak_to_peak", "skewness",
                            "root_square_amplitude", "absolute_mean", "variance",
                            "waveform_indicator", "peak")},
        },
        "frequency": {
            "type": "object",
            "required": ["rms", "kurtosis", "linear_kurtosis",
                         "gravity_center_freq_hz", "std_dev", "mean",
                         "freq_variance", "freq_std_dev", "energy"],
        },
        "wave": {
            "type": "object",
            "required": ["fundamental_period_s", "am_period_s", "periodic_shock",
                         "shock_strength"],
        },
        "harmonics": {
            "type": "object",
            "required": ["fundamental_hz", "entries", "subharmonics"],
        },
        "sidebands": {"type": "array"},
        "peaks": {"type": "array"},
    },
}

QA_PAIR_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["instruction", "input", "output", "meta"],
    "properties": {
        "instruction": {"type": "string", "minLength": 1},
        "input": {"type": "string", "minLength": 1},
        "output": {"type": "string", "minLength": 1},
        "meta": {"type": "object"},
    },
}

VALIDATION_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["n_checked", "n_schema_errors", "n_answer_mismatches",
                 "error_samples", "ok"],
    "properties": {
        "n_checked": {"type": "integer", "minimum": 0},
        "n_schema_errors": {"type": "integer", "minimum": 0},
        "n_answer_mismatches": {"type": "integer", "minimum": 0},
        "error_samples": {"type": "array", "items": {"type": "string"}},
        "ok": {"type": "boolean"},
    },
}
