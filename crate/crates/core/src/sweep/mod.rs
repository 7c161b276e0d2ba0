//! Point evaluation, parameter sweeps, figure presets and the validation
//! report, all rendered as deterministic CSV.

pub mod config;
pub mod engine;
pub mod presets;
pub mod report;
pub mod table;

pub use config::{parse_real, Axis, Output, RunConfig};
pub use engine::{cmd_point, cmd_sweep, evaluate_all, point_values, PointValues};
pub use presets::{cmd_figure, preset, Preset, PRESET_IDS};
pub use report::{cmd_validate, report_table, typo_table};
pub use table::{fmt_num, CsvTable};
