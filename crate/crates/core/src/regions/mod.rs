//! Regions of a reduced diagram seen as `m`-gons whose chords record deleted
//! 2-segments. Provides the face subdivision, the length check (every face
//! has `n+1` edges), the labelling check, exhaustive classification by
//! degree, labeling enumeration and b-segment detection.

mod bsegment;
mod classify;
mod config;
mod faces;
mod labels;
mod lec;

use thiserror::Error;

pub use bsegment::{b_segment_total, find_b_segments, BSegment};
pub use classify::{
    classify_regions, labeling_summary, ClassifyReport, LabelingSummary, Survivor, MAX_DEGREE, MAX_MULTIPLICITY,
};
pub use config::{crosses, ChordConfig};
pub use faces::{faces, Dart, EdgeRef, Face};
pub use labels::{enumerate_labelings, lac_check, LabeledRegion, LacResult, LacRule};
pub use lec::{lec_check, Affine, FeasibilityResult, NCondition};

/// Errors from region construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegionError {
    #[error("unsupported region degree {0}")]
    BadDegree(usize),
    #[error("chord ({p},{q}) is not valid on a {m}-gon")]
    BadChord { p: usize, q: usize, m: usize },
    #[error("chords {0:?} and {1:?} cross")]
    Crossing((usize, usize), (usize, usize)),
    #[error("cannot parse chord list `{0}`")]
    Syntax(String),
}
