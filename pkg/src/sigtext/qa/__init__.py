"""Instruction-tuning dataset construction and validation."""

from .builder import (EXPECTED_KIND, INSTRUCTION, QAPair, QuestionStyle,
                      STYLE_VERSIONS, build_qa_pair, params_from_dict,
                      params_to_dict, rebuild_qa_pair)
from .emit import (DEFAULT_CLASS_MIX, DEFAULT_STYLES, DatasetConfig, EmitResult,
                   allocate_classes, emit_dataset, generate_pair)
from .validate import ValidationReport, validate_dataset
