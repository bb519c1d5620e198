"""Flexible tensor products, tensor SVDs and singular-spectrum denoising."""

from .flexprod import MAX_ORDER, FlexOrder, flexible_product
from .ftsvd import (FtsvdKind, FtsvdResult, fold3, ftsvd_first, ftsvd_second,
                    reconstruct, unfold3)
from .ssa import (AutoBands, HankelDecomposition, SsaComponent, SsaConfig,
                  default_window_len, denoise, diagonal_average,
                  dominant_frequency_hz, hankel_embed, ssa_decompose)
