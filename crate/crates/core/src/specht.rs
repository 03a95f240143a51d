//! Concrete Specht modules: an exact matrix realization of the irreducible
//! symmetric-group representations.
//!
//! The module for a shape λ is spanned by polytabloids of standard tableaux
//! inside the tabloid permutation module. Permutations act by permuting
//! tabloids; expressing the image of a basis polytabloid in the standard
//! basis is an exact linear solve (straightening). Shapes stay tiny here, so
//! dense elimination over the rationals is plenty.

use crate::linalg::solve_in_basis;
use crate::partition::Partition;
use itertools::Itertools;
use num::{BigRational, One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

/// A tabloid on letters 0..m−1: `row_of[i]` is the row containing letter i.
type Tabloid = Vec<u8>;

/// An exact realization of the irreducible representation indexed by
/// `shape`, with basis the polytabloids of standard tableaux.
pub struct SpechtModule {
    shape: Partition,
    letters: usize,
    tabloid_index: HashMap<Tabloid, usize>,
    /// Polytabloid coordinate vectors (over tabloids) for each standard
    /// tableau, in enumeration order.
    basis: Vec<Vec<BigRational>>,
}

static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<SpechtModule>>>> = OnceLock::new();

impl SpechtModule {
    /// Fetch (or build and cache) the module for `shape`.
    pub fn get(shape: &Partition) -> Arc<SpechtModule> {
        let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(m) = cache.read().unwrap().get(shape) {
            return Arc::clone(m);
        }
        let built = Arc::new(SpechtModule::build(shape));
        let mut w = cache.write().unwrap();
        Arc::clone(w.entry(shape.clone()).or_insert(built))
    }

    fn build(shape: &Partition) -> SpechtModule {
        let letters = shape.size() as usize;
        let tabloids = enumerate_tabloids(shape);
        let tabloid_index: HashMap<Tabloid, usize> =
            tabloids.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let basis: Vec<Vec<BigRational>> = standard_tableaux(shape)
            .iter()
            .map(|t| polytabloid(shape, t, &tabloid_index))
            .collect();
        SpechtModule { shape: shape.clone(), letters, tabloid_index, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Matrix of the permutation `perm` (perm[i] = image of letter i) in the
    /// standard-polytabloid basis; entry [r][c] is the r-th coordinate of
    /// π·e_{t_c}.
    pub fn action(&self, perm: &[usize]) -> Vec<Vec<BigRational>> {
        assert_eq!(perm.len(), self.letters, "permutation degree mismatch");
        let n_tab = self.tabloid_index.len();
        let mut matrix = vec![vec![BigRational::zero(); self.dim()]; self.dim()];
        for (col, e_t) in self.basis.iter().enumerate() {
            // Permute tabloid coordinates: letter i moves to perm[i].
            let mut image = vec![BigRational::zero(); n_tab];
            for (tab, &idx) in &self.tabloid_index {
                if e_t[idx].is_zero() {
                    continue;
                }
                let mut moved = vec![0u8; self.letters];
                for (i, &row) in tab.iter().enumerate() {
                    moved[perm[i]] = row;
                }
                let target = self.tabloid_index[&moved];
                image[target] = e_t[idx].clone();
            }
            let coords = solve_in_basis(&self.basis, &[image])
                .expect("permuted polytabloid stays in the module");
            for (row, v) in coords.into_iter().enumerate() {
                matrix[row][col] = v;
            }
        }
        matrix
    }
}

/// All tabloids of the given shape: assignments of letters to rows with the
/// prescribed row sizes.
fn enumerate_tabloids(shape: &Partition) -> Vec<Tabloid> {
    let m = shape.size() as usize;
    if m == 0 {
        return vec![Vec::new()];
    }
    let rows = shape.len();
    let mut out = Vec::new();
    let mut row_of = vec![0u8; m];
    let mut remaining: Vec<u32> = shape.parts().to_vec();
    fn rec(
        pos: usize,
        row_of: &mut Vec<u8>,
        remaining: &mut Vec<u32>,
        rows: usize,
        out: &mut Vec<Tabloid>,
    ) {
        if pos == row_of.len() {
            out.push(row_of.clone());
            return;
        }
        for r in 0..rows {
            if remaining[r] > 0 {
                remaining[r] -= 1;
                row_of[pos] = r as u8;
                rec(pos + 1, row_of, remaining, rows, out);
                remaining[r] += 1;
            }
        }
    }
    rec(0, &mut row_of, &mut remaining, rows, &mut out);
    out
}

/// Standard Young tableaux of the given shape, as grids of letters.
fn standard_tableaux(shape: &Partition) -> Vec<Vec<Vec<usize>>> {
    let m = shape.size() as usize;
    let mut grid: Vec<Vec<usize>> =
        shape.parts().iter().map(|&w| vec![usize::MAX; w as usize]).collect();
    if m == 0 {
        return vec![grid];
    }
    let mut out = Vec::new();
    let mut fill: Vec<usize> = vec![0; shape.len()]; // next free column per row
    fn rec(
        letter: usize,
        m: usize,
        grid: &mut Vec<Vec<usize>>,
        fill: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if letter == m {
            out.push(grid.clone());
            return;
        }
        for r in 0..grid.len() {
            let c = fill[r];
            if c >= grid[r].len() {
                continue;
            }
            // The cell above must already be filled: the row above has
            // advanced past column c.
            if r > 0 && fill[r - 1] <= c {
                continue;
            }
            grid[r][c] = letter;
            fill[r] += 1;
            rec(letter + 1, m, grid, fill, out);
            fill[r] -= 1;
            grid[r][c] = usize::MAX;
        }
    }
    rec(0, m, &mut grid, &mut fill, &mut out);
    out
}

/// Parity of a permutation given as a sequence of distinct indices.
fn parity(perm: &[usize]) -> i32 {
    let inversions: usize =
        (0..perm.len()).map(|i| (i + 1..perm.len()).filter(|&j| perm[j] < perm[i]).count()).sum();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// e_t = Σ_{σ in the column group of t} sgn(σ)·{σ·t}, as a coordinate vector
/// over tabloids.
fn polytabloid(
    shape: &Partition,
    tableau: &[Vec<usize>],
    tabloid_index: &HashMap<Tabloid, usize>,
) -> Vec<BigRational> {
    let m = shape.size() as usize;
    let n_cols = shape.parts().first().copied().unwrap_or(0) as usize;
    // Letters of each column, top to bottom; column c spans rows 0..conj_c.
    let columns: Vec<Vec<usize>> = (0..n_cols)
        .map(|c| (0..shape.len()).filter(|&r| c < tableau[r].len()).map(|r| tableau[r][c]).collect())
        .collect();
    // Per column: every (letter -> row) rearrangement with its sign.
    let col_options: Vec<Vec<(Vec<(usize, usize)>, i32)>> = columns
        .iter()
        .map(|letters| {
            let r = letters.len();
            (0..r)
                .permutations(r)
                .map(|perm| {
                    let assign: Vec<(usize, usize)> =
                        perm.iter().enumerate().map(|(slot, &i)| (letters[i], slot)).collect();
                    (assign, parity(&perm))
                })
                .collect()
        })
        .collect();
    let mut vec = vec![BigRational::zero(); tabloid_index.len()];
    for combo in col_options.iter().multi_cartesian_product() {
        let mut row_of = vec![0u8; m];
        let mut sign = 1i32;
        for (assign, s) in &combo {
            sign *= s;
            for &(letter, row) in assign {
                row_of[letter] = row as u8;
            }
        }
        let idx = tabloid_index[&row_of];
        if sign > 0 {
            vec[idx] += BigRational::one();
        } else {
            vec[idx] -= BigRational::one();
        }
    }
    if n_cols == 0 {
        // Empty shape: the one tabloid with coefficient 1.
        vec[0] = BigRational::one();
    }
    vec
}
