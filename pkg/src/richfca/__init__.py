"""Formal concept analysis tools for studying rich object/attribute pairs."""

from richfca.concepts import Concept, ConceptSet, count_concepts, enumerate_concepts
from richfca.context import (
    AttributeSet, FormalContext, ObjectSet, apply_op, close_objects, co_extent,
    co_intent, contranominal, delete_pair, derive_attributes, derive_objects,
    direct_sum, empty_context, full_context, remove_incidence, subcontext,
)
from richfca.cxt import load, read_cxt, save, write_cxt
from richfca.edit_ops import (
    contrast, contranominal_summand_size, find_rich_pair, is_rich_pair, nop_run,
    nop_sequence, nop_step, noncontranominal_kernel, select_object_theorem2,
)
from richfca.errors import (
    CxtParseError, DomainError, ForeignSetError, GuardError, InvariantViolation,
    RichFCAError,
)
from richfca.kernels import BACKEND
from richfca.mixgen import (
    build_complete_system, chi, chi_bar, decompose, is_mixed_generator,
    lex_min_mixgen, strongly_avoids, validate_system, verify_theorem1,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
