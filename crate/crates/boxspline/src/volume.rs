//! Exact volume of a polytope given by vertices and tight-constraint masks.
//!
//! Faces are identified by the set of constraints tight on all of their
//! vertices. Each face volume is measured in its own coordinate projection
//! and the pyramid decomposition from a fixed vertex recurses into facets.

use std::collections::{HashMap, HashSet};

use lrbox_core::{rat_int, Rational};
use num_bigint::BigInt;
use num_traits::Signed;

use crate::intmat;
use crate::slice::SliceGeometry;

pub(crate) struct Polytope<'a> {
    geom: &'a SliceGeometry,
    verts: Vec<Vec<i128>>,
    masks: Vec<u128>,
    memo: HashMap<u128, Rational>,
}

impl<'a> Polytope<'a> {
    pub fn new(geom: &'a SliceGeometry, verts: Vec<Vec<i128>>, masks: Vec<u128>) -> Self {
        Polytope { geom, verts, masks, memo: HashMap::new() }
    }

    /// Lebesgue volume in the ambient coordinates; zero if not full-dimensional.
    pub fn volume(&mut self) -> Rational {
        let all: Vec<usize> = (0..self.verts.len()).collect();
        let tight = self.masks.iter().fold(!0u128, |acc, m| acc & m);
        let frame = self.geom.frame(self.geom.rows_of(tight));
        if frame.dim < self.geom.slice_dim() {
            return rat_int(0);
        }
        self.face_volume(tight, &all)
    }

    fn face_volume(&mut self, tight: u128, verts: &[usize]) -> Rational {
        if let Some(v) = self.memo.get(&tight) {
            return v.clone();
        }
        let frame = self.geom.frame(self.geom.rows_of(tight));
        let j = frame.dim;
        let vol = match j {
            0 => rat_int(1),
            1 => {
                let c = frame.coords[0];
                let lo = verts.iter().map(|&v| self.verts[v][c]).min().unwrap();
                let hi = verts.iter().map(|&v| self.verts[v][c]).max().unwrap();
                Rational::from_integer(BigInt::from(hi - lo))
            }
            _ => {
                let apex = verts[0];
                let apex_mask = self.masks[apex];
                let mut seen = HashSet::new();
                let mut acc = rat_int(0);
                for c in 0..self.geom.num_constraints() {
                    let bit = 1u128 << c;
                    if tight & bit != 0 || apex_mask & bit != 0 {
                        continue;
                    }
                    let sub: Vec<usize> = verts.iter().copied().filter(|&v| self.masks[v] & bit != 0).collect();
                    if sub.is_empty() {
                        continue;
                    }
                    let gt = sub.iter().fold(!0u128, |a, &v| a & self.masks[v]);
                    if !seen.insert(gt) {
                        continue;
                    }
                    let gframe = self.geom.frame(self.geom.rows_of(gt));
                    if gframe.dim + 1 != j {
                        continue;
                    }
                    let w = sub[0];
                    let m: Vec<Vec<i128>> = frame
                        .coords
                        .iter()
                        .map(|&cl| {
                            let mut row: Vec<i128> = gframe.basis.iter().map(|b| b[cl]).collect();
                            row.push(self.verts[apex][cl] - self.verts[w][cl]);
                            row
                        })
                        .collect();
                    let height = intmat::det(&m).abs();
                    let inner = self.face_volume(gt, &sub);
                    acc += inner * Rational::new(height, gframe.det.clone());
                }
                acc / rat_int(j as i64)
            }
        };
        self.memo.insert(tight, vol.clone());
        vol
    }
}
