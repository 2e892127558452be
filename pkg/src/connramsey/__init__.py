"""Finite partition relations for highly connected and well-connected
subsets: data model, deciders, threshold search, and certificates."""

from .arrows import (
    DecisionOutcome,
    ResourceCapExceeded,
    ThresholdResult,
    decide,
    decide_classical,
    decide_hc,
    decide_wc,
    enumerate_colorings_canonical,
    palette_tuples,
    ramsey_number,
)
from .connectivity import (
    Graph,
    is_connected,
    is_highly_connected,
    kappa_connected_bruteforce,
    kappa_connected_fast,
    make_graph,
    read_graph,
    write_graph,
)
from .core import (
    Coloring,
    FormatError,
    HcCertificate,
    Palette,
    RelationQuery,
    WcCertificate,
    canonical_color_form,
    certificate_from_json,
    certificate_to_json,
    make_coloring,
    permute_colors,
    read_coloring,
    restrict_coloring,
    write_coloring,
)
from .generators import (
    StringVertexMap,
    aligned,
    constant_coloring,
    delta_coloring,
    find_delta_subsystem,
    hub_coloring,
    random_coloring,
)
from .ordinals import (
    CnfOrdinal,
    CsystemReport,
    acc_member,
    check_csystem_axioms,
    club_interval,
    coloring_from_csystem,
    derived_color,
    i_min,
    ord_parse,
    ord_print,
    sample_universe,
)
from .wellconn import WcOrder, is_wc_set, longest_wc_set, tree_check, wc_order, wc_pair
from .cli import verify_certificate

__version__ = "0.1.0"
