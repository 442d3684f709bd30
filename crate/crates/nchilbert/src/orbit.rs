//! Orbits of monomial right ideals under the single-variable colon
//! operators: the finite automaton whose transfer matrix determines every
//! Hilbert series in this crate.
//!
//! Exploration is breadth-first with variables scanned in index order, so
//! element indices, transition tables and everything derived from them are
//! reproducible run to run.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::ideals::{ColonError, MonomialIdeal};
use crate::words::Var;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitError {
    /// More elements than `max_orbit`: the ideal is suspected non-regular
    /// (or the limit is simply too small for it).
    LimitExceeded {
        limit: usize,
    },
    DegreeBudgetExhausted,
    /// The input ideal is the unit ideal, so the reduced orbit is empty and
    /// the series is 0.
    EmptyReducedOrbit,
}

impl fmt::Display for OrbitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitError::LimitExceeded { limit } => {
                write!(
                    f,
                    "orbit exceeds {limit} elements; the ideal may not be regular"
                )
            }
            OrbitError::DegreeBudgetExhausted => ColonError::DegreeBudgetExhausted.fmt(f),
            OrbitError::EmptyReducedOrbit => {
                write!(f, "the unit ideal has an empty reduced orbit")
            }
        }
    }
}

impl std::error::Error for OrbitError {}

impl From<ColonError> for OrbitError {
    fn from(e: ColonError) -> Self {
        match e {
            ColonError::DegreeBudgetExhausted => OrbitError::DegreeBudgetExhausted,
        }
    }
}

/// The closed orbit of an ideal: elements, transition table and constants.
#[derive(Debug)]
pub struct Orbit {
    elements: Vec<MonomialIdeal>,
    /// `transitions[k][i] = l` means `T_{x_i}(I_k) = I_l`.
    transitions: Vec<Vec<usize>>,
    /// `c_k = 0` for the unit ideal, else 1.
    constants: Vec<u8>,
    unit_index: Option<usize>,
    /// Maximum total degree of the shortest defining words (BFS depth).
    max_defining_word_length: u32,
    nvars: usize,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[MonomialIdeal] {
        &self.elements
    }

    pub fn transition(&self, state: usize, var: Var) -> usize {
        self.transitions[state][var as usize]
    }

    pub fn transitions(&self) -> &[Vec<usize>] {
        &self.transitions
    }

    pub fn constants(&self) -> &[u8] {
        &self.constants
    }

    pub fn unit_index(&self) -> Option<usize> {
        self.unit_index
    }

    pub fn max_defining_word_length(&self) -> u32 {
        self.max_defining_word_length
    }

    /// The 0/1 components of the adjacency matrix, one per variable. Each
    /// row of a component holds exactly one 1, recorded by column index.
    pub fn adjacency_components(&self) -> Vec<AdjacencyComponent> {
        (0..self.nvars)
            .map(|i| AdjacencyComponent {
                col_of_row: self.transitions.iter().map(|row| row[i]).collect(),
            })
            .collect()
    }

    /// The orbit with the unit ideal removed; transitions into it become
    /// absorbing (`None`).
    pub fn reduced(&self) -> Result<ReducedOrbit, OrbitError> {
        if self.unit_index == Some(0) {
            return Err(OrbitError::EmptyReducedOrbit);
        }
        let mut original_indices = Vec::with_capacity(self.len());
        let mut remap: Vec<Option<usize>> = vec![None; self.len()];
        for k in 0..self.len() {
            if Some(k) != self.unit_index {
                remap[k] = Some(original_indices.len());
                original_indices.push(k);
            }
        }
        let transitions = original_indices
            .iter()
            .map(|&k| self.transitions[k].iter().map(|&l| remap[l]).collect())
            .collect();
        Ok(ReducedOrbit {
            original_indices,
            remap,
            transitions,
        })
    }
}

/// One component `A^(i)` of the adjacency matrix in row/column form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyComponent {
    col_of_row: Vec<usize>,
}

impl AdjacencyComponent {
    pub fn entry(&self, row: usize, col: usize) -> u8 {
        u8::from(self.col_of_row[row] == col)
    }

    pub fn row_sum(&self, row: usize) -> u32 {
        let _ = self.col_of_row[row];
        1
    }

    pub fn col_of_row(&self, row: usize) -> usize {
        self.col_of_row[row]
    }

    pub fn len(&self) -> usize {
        self.col_of_row.len()
    }

    pub fn is_empty(&self) -> bool {
        self.col_of_row.is_empty()
    }
}

/// Orbit restricted to the non-unit states.
#[derive(Debug)]
pub struct ReducedOrbit {
    /// reduced index -> index in the full orbit
    original_indices: Vec<usize>,
    /// full index -> reduced index (None for the unit state)
    remap: Vec<Option<usize>>,
    /// `None` entries are transitions into the removed unit state.
    transitions: Vec<Vec<Option<usize>>>,
}

impl ReducedOrbit {
    pub fn len(&self) -> usize {
        self.original_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.original_indices.is_empty()
    }

    pub fn original_indices(&self) -> &[usize] {
        &self.original_indices
    }

    pub fn remap(&self) -> &[Option<usize>] {
        &self.remap
    }

    pub fn transitions(&self) -> &[Vec<Option<usize>>] {
        &self.transitions
    }

    /// A topological order of the transition digraph (every edge `k -> l`
    /// has `k` before `l`), or `None` when it contains a cycle.
    ///
    /// Acyclicity of the reduced orbit is equivalent to nilpotency of the
    /// reduced adjacency matrix, i.e. to the quotient being
    /// finite-dimensional, so this doubles as the finite-dimension test.
    pub fn nilpotency_order(&self) -> Option<Vec<usize>> {
        let r = self.len();
        let mut indegree = vec![0usize; r];
        for row in &self.transitions {
            for l in row.iter().flatten() {
                indegree[*l] += 1;
            }
        }
        // smallest-index-first for a deterministic order
        let mut ready: std::collections::BTreeSet<usize> =
            (0..r).filter(|&k| indegree[k] == 0).collect();
        let mut order = Vec::with_capacity(r);
        while let Some(&k) = ready.iter().next() {
            ready.remove(&k);
            order.push(k);
            for l in self.transitions[k].iter().flatten() {
                indegree[*l] -= 1;
                if indegree[*l] == 0 {
                    ready.insert(*l);
                }
            }
        }
        if order.len() == r {
            Some(order)
        } else {
            None
        }
    }
}

/// Breadth-first closure of `{input}` under all single-variable colon
/// operators, deduplicating by canonical key (or by the bounded comparison
/// in guess mode). Element 0 is the input ideal.
pub fn compute_orbit(
    input: &MonomialIdeal,
    nvars: usize,
    max_orbit: usize,
) -> Result<Orbit, OrbitError> {
    assert!(max_orbit >= 1, "max_orbit must be positive");
    let guess_mode = input.known_up_to().is_some();
    let mut elements: Vec<MonomialIdeal> = vec![input.clone()];
    let mut depth: Vec<u32> = vec![0];
    let mut by_key: HashMap<Vec<u8>, usize> = HashMap::new();
    if !guess_mode {
        by_key.insert(input.canonical_key(), 0);
    }
    let mut transitions: Vec<Vec<usize>> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::from([0]);

    while let Some(k) = queue.pop_front() {
        let mut row = Vec::with_capacity(nvars);
        for i in 0..nvars {
            let next = elements[k].colon_var(i as Var)?;
            let found = if guess_mode {
                elements.iter().position(|e| e.same_orbit_element(&next))
            } else {
                by_key.get(&next.canonical_key()).copied()
            };
            let idx = match found {
                Some(idx) => idx,
                None => {
                    if elements.len() >= max_orbit {
                        return Err(OrbitError::LimitExceeded { limit: max_orbit });
                    }
                    let idx = elements.len();
                    if !guess_mode {
                        by_key.insert(next.canonical_key(), idx);
                    }
                    elements.push(next);
                    depth.push(depth[k] + 1);
                    queue.push_back(idx);
                    idx
                }
            };
            row.push(idx);
        }
        transitions.push(row);
    }

    let unit_index = elements.iter().position(MonomialIdeal::is_unit);
    let constants = elements.iter().map(|e| u8::from(!e.is_unit())).collect();
    let max_defining_word_length = depth.iter().copied().max().unwrap_or(0);
    Ok(Orbit {
        elements,
        transitions,
        constants,
        unit_index,
        max_defining_word_length,
        nvars,
    })
}
