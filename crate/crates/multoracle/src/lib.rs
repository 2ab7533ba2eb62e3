//! Formula-based multiplicity oracle.
//!
//! Everything here is computed from classical closed formulas (Kostant,
//! Kostant-Steinberg, Freudenthal, Weyl) and serves as ground truth for the
//! box-spline identities checked elsewhere.

mod character;
mod error;
mod lr;
mod partition;


use std::collections::HashMap;
use std::sync::{Arc, RwLock};

pub use character::Character;
pub use error::OracleError;
use lrbox_rootsys::RootSystem;
pub use partition::KostantPartition;

/// Shared oracle for one root system; memo tables are internally synchronized.
pub struct Oracle {
    rs: Arc<RootSystem>,
    partition: KostantPartition,
    characters: RwLock<HashMap<Vec<i64>, Arc<Character>>>,
}

impl Oracle {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        Self { partition: KostantPartition::new(rs.clone()), rs, characters: RwLock::new(HashMap::new()) }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn partition(&self) -> &KostantPartition {
        &self.partition
    }
}
