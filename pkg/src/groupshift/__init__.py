"""Subshifts of finite type on finitely generated groups."""
from .errors import (CapacityError, ContractViolation, DecodeError, EmptySubshiftError, GroupShiftError, InputError,
                     OracleUnknownError)
from .groups import (DirectProduct, FiniteGroup, FiniteIndexData, FreeAbelianGroup, FreeGroup, GeneratorSet, Group,
                     Homomorphism, ball, coset_rewrite, cyclic_group, hom_apply, is_identity, normal_form)
from .subshift import (LazyConfiguration, OneOf, Pattern, Sft, admissible_patches, check_patch, count_admissible,
                       disjoint_union_sft, full_shift, intersect_sft, product_sft, stabilizer_sft,
                       verify_configuration, verify_pattern)
from .certify import EmptinessCertificate, emptiness, finite_quotient, periodic_point_search
from .transfer import (KernelData, LocalRule, SectionData, apply_local_rule, free_extension_sft,
                       higher_block_decode, higher_block_encode, higher_block_sft, lift_config_finite_index,
                       lift_local_rule, pullback_config, pullback_sft, restrict_config, section_config)
from .actions import (DisplacementAlphabet, RelatorSet, TranslationLikeAction, build_T_sft, canonical_point,
                      decode_overlay, encode_overlay, overlay_sft, walk_phi)
from .synthesis import (NearestNeighborTreeSft, WindowChain, domino_guided_point, finite_orbit_point, greedy_point,
                        greedy_tree_point, minimal_allowed_set, nn_recode, prune_alive)

__version__ = "0.1.0"
