"""Signal classification and standardized text description."""

from .classify import SignalKind, classify
from .pipeline import (DescribeConfig, FeatureBundle, PipelineError,
                       compute_features, describe)
from .templates import (Description, MissingFeatureError, Precision, fmt,
                        ordinal_suffixed, ordinal_word, render_description)
