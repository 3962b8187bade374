"""finframe: finite frames and locales.

Finite complete Heyting algebras with precomputed tables, sublocale
machinery (open/closed sublocales, nuclei, closure/fitting, exhaustive
enumeration), the Booleanization and DeMorganization constructions with
brute-force oracles, plus builders and a corpus CLI.
"""

from .builders import (
    PosetSpec,
    TopologySpec,
    b4,
    c3,
    downset_frame,
    enumerate_topologies,
    f5,
    fixture,
    from_topology,
    product_frame,
    random_topology,
    standard_frame,
)
from .demorgan import (
    booleanization,
    booleanization_via_dense_opens,
    demorganization,
    is_boolean,
    is_extremally_disconnected,
    oracle_largest_dense_ed,
    oracle_least_dense,
    oracle_unique_boolean_dense,
    verify_nearly_open,
)
from .errors import (
    CyclicPoset,
    EmptyList,
    FinframeError,
    FrameMismatch,
    IntegrityError,
    MalformedJson,
    NotALattice,
    NotAntisymmetric,
    NotATopology,
    NotDense,
    NotDistributive,
    NotPrime,
    OracleFailure,
    TooLarge,
    UnknownKind,
)
from .frame import Frame, LawReport, build_frame, frame_from_tables, verify_heyting_laws
from .report import analyze_frame
from .spec_io import FrameSpec, build_from_spec, parse_frame_spec, serialize_frame_spec
from .sublocales import (
    InducedFrame,
    Nucleus,
    Sublocale,
    closed_sublocale,
    closure,
    enumerate_sublocales,
    fitting,
    induced_frame,
    intersect_sublocales,
    is_dense,
    is_fitted,
    is_isolated_point,
    is_sublocale,
    join_sublocales,
    nucleus_of,
    open_sublocale,
    prime_elements,
    verify_coframe_law,
)

__version__ = "0.1.0"
