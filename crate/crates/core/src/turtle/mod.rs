//! Drawing rules, path tracing, 1-D dynamics and path geometry checks.

pub mod firehose;
pub mod growth;
pub mod intersect;
pub mod line;
pub mod path;
pub mod rules;

pub use firehose::{find_firehose_angle, net_heading_drift, AngleSearch};
pub use growth::{growth_chart, GrowthChart, GrowthNode};
pub use intersect::{self_intersections, IntersectionReport};
pub use line::{deviation_diagram, max_deviation, trace_1d, zero_excursions, DeviationDiagram, Excursion, ExcursionReport, Structure, Trace1d};
pub use path::{half_turn_symmetry, trace, trace_from, BBox, Path, Start, Symmetry};
pub use rules::{builtin_rules, DrawingRule, Length, TokenScheme, TurtleAction};
