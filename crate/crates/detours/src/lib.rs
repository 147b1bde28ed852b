//! Catalog scans over graph6 streams: detour counts per graph, exhaustive
//! checks of the detour-count lower bounds, minimum-count tabulation and
//! witness search, plus the `detours` command-line front end.

pub mod cli;
mod error;
pub mod filter;
pub mod generate;
pub mod io;
pub mod record;
pub mod scan;
pub mod tabulate;
pub mod verify;
pub mod witness;

pub use error::{Result, SearchError};
pub use filter::{DegreeMode, FilterSpec, Parity};
pub use generate::{labeled_graphs, LABELED_MAX_ORDER};
pub use record::{Engine, ReportRecord, ScanRecord};
pub use scan::{scan, ErrorPolicy, ScanConfig, ScanStats, Scanner, RESUME_LOG_ENV};
pub use tabulate::{tabulate, SearchSummary, Tabulator, DEFAULT_WITNESS_CAP};
pub use verify::{verify_theorem_1, verify_theorem_2, MinFourCheck, OddMinNineCheck, Verdict};
pub use witness::{reverify, witness_search, WitnessCollector};
