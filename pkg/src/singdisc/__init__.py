"""Exact obstruction-group calculator for normal surface singularities.

The local obstruction of a normal surface germ is a finite abelian group
that can be reached along three independent routes: as the discriminant
group of the exceptional lattice of a resolution, as the torsion of the
link homology, and (for hypersurface germs) as the torsion cokernel of
the integral variation map of the Milnor monodromy.  This package
computes each route in exact integer arithmetic and cross-checks them.
"""

from .exact import (
    Cokernel,
    DimensionError,
    FiniteAbelianGroup,
    IntMatrix,
    SmithDecomposition,
    ValidationError,
    char_poly,
    cokernel,
    determinant,
    is_negative_definite,
    smith_normal_form,
)
from .graphs import (
    ContinuedFraction,
    HirzebruchJungExpansion,
    ResolutionGraph,
    Vertex,
    ade_graph,
    hirzebruch_jung,
)
from .lattice import DegenerateFormError, Lattice
from .links import (
    LinkHomology,
    NotResolutionGraphError,
    brieskorn_h1_order,
    lens_space_h1,
    link_from_plumbing,
)
from .monodromy import (
    MonodromyOperator,
    VariationResult,
    brieskorn_pham_operator,
    coxeter_operator,
    variation,
)
from .report import (
    AdeSpec,
    BrieskornPhamSpec,
    CyclicQuotientSpec,
    ObstructionReport,
    PlumbingSpec,
    Realization,
    SingularitySpec,
    SpecError,
    compute_report,
    parse_spec,
    render_report,
    report_from_json,
    report_to_json,
)
from .tables import GoldenRow, TablesResult, reproduce_tables, selfcheck_corpus

__version__ = "0.1.0"

__all__ = [
    "AdeSpec",
    "BrieskornPhamSpec",
    "Cokernel",
    "ContinuedFraction",
    "CyclicQuotientSpec",
    "DegenerateFormError",
    "DimensionError",
    "FiniteAbelianGroup",
    "GoldenRow",
    "HirzebruchJungExpansion",
    "IntMatrix",
    "Lattice",
    "LinkHomology",
    "MonodromyOperator",
    "NotResolutionGraphError",
    "ObstructionReport",
    "PlumbingSpec",
    "Realization",
    "ResolutionGraph",
    "SingularitySpec",
    "SmithDecomposition",
    "SpecError",
    "TablesResult",
    "ValidationError",
    "VariationResult",
    "Vertex",
    "ade_graph",
    "brieskorn_h1_order",
    "brieskorn_pham_operator",
    "char_poly",
    "cokernel",
    "compute_report",
    "coxeter_operator",
    "determinant",
    "hirzebruch_jung",
    "is_negative_definite",
    "lens_space_h1",
    "link_from_plumbing",
    "parse_spec",
    "render_report",
    "report_from_json",
    "report_to_json",
    "reproduce_tables",
    "selfcheck_corpus",
    "smith_normal_form",
    "variation",
]
