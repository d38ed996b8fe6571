"""
Certificate-producing engines: window images, Garden-of-Eden patterns,
mutually erasable pairs, entropy traces and the Myhill audit
"""
from .certificates import (
    Certificate,
    CertificateKind,
    ErasablePair,
    GardenOfEden,
    ImageEvidence,
)
from .search import WindowImage, find_goe_pattern, find_mutually_erasable, window_image
from .entropy import (
    LIMSUP_LABEL,
    EntropyEntry,
    EntropyTrace,
    entropy_deficit_bound,
    estimate_entropy,
)
from .bounds import (
    AdherenceBound,
    ShiftedMissing,
    WindowInequality,
    adherence_bound,
    translate_missing_pattern,
    window_inequality,
)
from .replay import replay_certificate
from .audit import AuditVerdict, Consistency, Status, myhill_audit
