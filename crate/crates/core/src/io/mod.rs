//! File formats, instance generation and event replay.

pub mod events;
pub mod format;
pub mod generate;
pub mod plan_file;
pub mod simulate;

pub use events::{parse_events, Event, EventError};
pub use format::{parse_graph, write_graph, ParseError};
pub use generate::{generate_graph, GenerateError, GeneratorConfig};
pub use plan_file::{fingerprint, read_plan, write_plan, Fingerprint, PlanFileError};
pub use simulate::{simulate, LatencyStats, SimulateError, SimulationReport};
