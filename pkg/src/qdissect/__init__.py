"""Truncated q-series arithmetic and dissection-identity verification."""

from .series import RingSpec, Series, ZZ, mod_ring
from .eta import (
    EtaExpression,
    EtaQuotient,
    EtaTerm,
    ParseError,
    PochhammerFactor,
    expand_eta,
    expand_expression,
    expand_pochhammer,
    parse,
    render,
)
from .dissect import (
    IdentityRecord,
    RootRecipe,
    VerificationReport,
    extract,
    get_record,
    load_catalog,
    required_root_precision,
    verify_catalog,
    verify_dissection_theorem,
    verify_identity,
)
from .schur import (
    ResidueTable,
    SchurSeries,
    oracle_part_count,
    oracle_schur_overpartitions,
    residue_table,
    s_series,
)
from .congruences import (
    CongruenceTriple,
    FamilyCheck,
    FamilySpec,
    InternalCongruence,
    INTERNAL_CONJECTURED,
    INTERNAL_PROVED,
    check_internal,
    check_triple,
    family_progression,
    scan,
    scan_to_json,
    verify_family,
)
from .aaw import (
    ParamPair,
    compute_L,
    compute_params,
    phi,
    verify_L_identity,
    verify_param_identities,
)

__all__ = [
    "CongruenceTriple",
    "EtaExpression",
    "EtaQuotient",
    "EtaTerm",
    "FamilyCheck",
    "FamilySpec",
    "INTERNAL_CONJECTURED",
    "INTERNAL_PROVED",
    "IdentityRecord",
    "InternalCongruence",
    "ParamPair",
    "ParseError",
    "PochhammerFactor",
    "ResidueTable",
    "RingSpec",
    "RootRecipe",
    "SchurSeries",
    "Series",
    "VerificationReport",
    "ZZ",
    "check_internal",
    "check_triple",
    "compute_L",
    "compute_params",
    "expand_eta",
    "expand_expression",
    "expand_pochhammer",
    "extract",
    "family_progression",
    "get_record",
    "load_catalog",
    "mod_ring",
    "oracle_part_count",
    "oracle_schur_overpartitions",
    "parse",
    "phi",
    "render",
    "required_root_precision",
    "residue_table",
    "s_series",
    "scan",
    "scan_to_json",
    "verify_L_identity",
    "verify_catalog",
    "verify_dissection_theorem",
    "verify_family",
    "verify_identity",
    "verify_param_identities",
]
