//! Enumeration, count tables and the cross-check report.

mod enumerate;
mod report;
mod table;
mod verify;

pub use enumerate::{
    enumerate_class, enumerate_class_with, enumerate_members, enumerate_simples, enumerate_simples_with, SPLIT_LENGTH,
};
pub use report::{Check, Report, Status};
pub use table::{CountSource, CountTable, TableFormat};
pub use verify::{
    check_alternation_census, check_assembly, check_both_patterns, check_catalan, check_class_counts,
    check_classification, check_extremal_forms, check_growth, check_inflation, check_juxtaposition,
    check_poset_equivalence, check_residual, check_simple_counts, check_summation, check_theorem_equivalence,
    inflation_part_pool, simple_class_basis, simple_members, three_plus_one_basis, verify_all,
    verify_inflation_proposition, verify_with, Fault, InflationCounterexample, InflationReport, VerifyOptions,
    DEFAULT_ENUM_LIMIT,
};
