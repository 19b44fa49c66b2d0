//! The modules W^(e,ν) with formal w = q^ν, their finite truncations and the
//! Bargmann realization on polynomials.

use std::collections::{BTreeMap, HashMap};

use crate::catalog;
use crate::error::{Error, Result};
use crate::ncalg::{NCExpr, Word};
use crate::presentations;
use crate::scalars::{Bindings, Scalar, Symbol};

/// Default basis cutoff for checks on the infinite-dimensional modules.
pub const DEFAULT_CUTOFF: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Plus, Parity::Minus];

    pub fn sign(self) -> i64 {
        match self {
            Parity::Plus => 1,
            Parity::Minus => -1,
        }
    }

    pub fn from_sign(e: i64) -> Option<Parity> {
        match e {
            1 => Some(Parity::Plus),
            -1 => Some(Parity::Minus),
            _ => None,
        }
    }
}

fn alternating(e: Parity, n: u32) -> Scalar {
    let sign = if n % 2 == 0 { e.sign() } else { -e.sign() };
    Scalar::from_int(sign)
}

/// Finitely supported vector in the basis f_n.
#[derive(Clone, Debug, PartialEq)]
pub struct RepVector {
    entries: BTreeMap<u32, Scalar>,
    e: Parity,
}

impl RepVector {
    pub fn zero(e: Parity) -> RepVector {
        RepVector { entries: BTreeMap::new(), e }
    }

    pub fn basis(n: u32, e: Parity) -> RepVector {
        let mut v = RepVector::zero(e);
        v.add_term(n, Scalar::one());
        v
    }

    pub fn parity(&self) -> Parity {
        self.e
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.entries.iter().map(|(n, c)| (*n, c))
    }

    pub fn coefficient(&self, n: u32) -> Scalar {
        self.entries.get(&n).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_term(&mut self, n: u32, c: Scalar) {
        add_coeff(&mut self.entries, n, c);
    }

    pub fn scale(&self, c: &Scalar) -> RepVector {
        let mut r = RepVector::zero(self.e);
        for (n, x) in &self.entries {
            r.add_term(*n, x * c);
        }
        r
    }

    pub fn sub(&self, o: &RepVector) -> RepVector {
        let mut r = self.clone();
        for (n, x) in &o.entries {
            r.add_term(*n, -x);
        }
        r
    }
}

fn add_coeff(map: &mut BTreeMap<u32, Scalar>, n: u32, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let sum = match map.get(&n) {
        Some(x) => x + &c,
        None => c,
    };
    if sum.is_zero() {
        map.remove(&n);
    } else {
        map.insert(n, sum);
    }
}

/// Polynomial in z; z^n stands for f_n.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct BargmannPoly {
    coeffs: BTreeMap<u32, Scalar>,
}

impl BargmannPoly {
    pub fn monomial(n: u32) -> BargmannPoly {
        let mut p = BargmannPoly::default();
        add_coeff(&mut p.coeffs, n, Scalar::one());
        p
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn coefficient(&self, n: u32) -> Scalar {
        self.coeffs.get(&n).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn map_diag(&self, f: impl Fn(u32) -> Scalar) -> BargmannPoly {
        let mut r = BargmannPoly::default();
        for (n, c) in &self.coeffs {
            add_coeff(&mut r.coeffs, *n, c * &f(*n));
        }
        r
    }

    fn add(&self, o: &BargmannPoly) -> BargmannPoly {
        let mut r = self.clone();
        for (n, c) in &o.coeffs {
            add_coeff(&mut r.coeffs, *n, c.clone());
        }
        r
    }

    fn scale(&self, c: &Scalar) -> BargmannPoly {
        self.map_diag(|_| c.clone())
    }

    fn times_z(&self) -> BargmannPoly {
        BargmannPoly { coeffs: self.coeffs.iter().map(|(n, c)| (n + 1, c.clone())).collect() }
    }

    /// Exact division by z; `None` if the constant term is nonzero.
    fn div_z(&self) -> Option<BargmannPoly> {
        if self.coeffs.contains_key(&0) {
            return None;
        }
        Some(BargmannPoly { coeffs: self.coeffs.iter().map(|(n, c)| (n - 1, c.clone())).collect() })
    }

    pub fn to_rep_vector(&self, e: Parity) -> RepVector {
        RepVector { entries: self.coeffs.clone(), e }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Op {
    Raise,
    Lower,
    K,
    Kinv,
    P,
}

const OPS: [Op; 5] = [Op::Raise, Op::Lower, Op::K, Op::Kinv, Op::P];

fn op_of(name: &str) -> Result<Op> {
    Ok(match name {
        "A+" => Op::Raise,
        "A-" => Op::Lower,
        "K" => Op::K,
        "Kinv" => Op::Kinv,
        "P" => Op::P,
        other => return Err(Error::MissingImage(other.to_string())),
    })
}

fn op_code(op: Op) -> u8 {
    OPS.iter().position(|o| *o == op).expect("listed") as u8
}

fn ops_of(x: &NCExpr) -> Result<Vec<Option<Op>>> {
    x.alphabet().names().iter().map(|n| Ok(op_of(n).ok())).collect()
}

/// ρ_n = [n+ν]_q − (−1)^n [ν]_q for given values of s and w.
pub fn rho_at(n: u32, s: &Scalar, w: &Scalar) -> Result<Scalar> {
    let d = &s.pow(2)? - &s.pow(-2)?;
    let winv = w.inv()?;
    let shifted = &(&s.pow(2 * n as i32)? * w) - &(&s.pow(-2 * n as i32)? * &winv);
    let base = w - &winv;
    let sign = if n % 2 == 0 { Scalar::one() } else { Scalar::from_int(-1) };
    (&shifted - &(&sign * &base)).div(&d)
}

/// ρ_n with formal s and w.
pub fn rho(n: u32) -> Scalar {
    rho_at(n, &Scalar::symbol(Symbol::S), &Scalar::symbol(Symbol::W)).expect("nonzero denominators")
}

/// q-number [ν]_q for given s and w.
fn q_nu(s: &Scalar, w: &Scalar) -> Result<Scalar> {
    (w - &w.inv()?).div(&(&s.pow(2)? - &s.pow(-2)?))
}

/// One concrete module: W^(e,ν) for given values of s and w, optionally
/// truncated to span{f_0..f_N}.
pub struct Module {
    e: Parity,
    s: Scalar,
    w: Scalar,
    top: Option<u32>,
    /// Set when s is a value; applied to the coefficients of acting elements.
    at: Option<Bindings>,
    diag: HashMap<(Op, u32), Scalar>,
    words: HashMap<(Word, u32), Option<(u32, Scalar)>>,
}

impl Module {
    /// W^(e,ν) with formal s and w.
    pub fn infinite(e: Parity) -> Module {
        Module::with_values(e, Scalar::symbol(Symbol::S), Scalar::symbol(Symbol::W), None)
    }

    /// The (N+1)-dimensional quotient at w = s^-(N+1), formal s.
    pub fn finite(n: i64, e: Parity) -> Result<Module> {
        Module::finite_at(n, e, Scalar::symbol(Symbol::S))
    }

    /// The (N+1)-dimensional quotient with s set to a value.
    pub fn finite_at(n: i64, e: Parity, s: Scalar) -> Result<Module> {
        if n < 0 || n % 2 != 0 {
            return Err(Error::OddN(n));
        }
        let w = s.pow(-(n as i32 + 1))?;
        let r = rho_at(n as u32 + 1, &s, &w)?;
        if !r.is_zero() {
            return Err(Error::Truncation(format!("rho({}) = {} does not vanish", n + 1, r)));
        }
        Ok(Module::with_values(e, s, w, Some(n as u32)))
    }

    fn with_values(e: Parity, s: Scalar, w: Scalar, top: Option<u32>) -> Module {
        let at = (s != Scalar::symbol(Symbol::S)).then(|| [(Symbol::S, s.clone())].into_iter().collect());
        Module { e, s, w, top, at, diag: HashMap::new(), words: HashMap::new() }
    }

    pub fn parity(&self) -> Parity {
        self.e
    }

    pub fn dim(&self) -> Option<u32> {
        self.top.map(|t| t + 1)
    }

    fn coeff(&mut self, op: Op, n: u32) -> Result<Scalar> {
        if let Some(c) = self.diag.get(&(op, n)) {
            return Ok(c.clone());
        }
        let c = match op {
            Op::K => &self.s.pow(2 * n as i32 + 1)? * &self.w,
            Op::Kinv => (&self.s.pow(2 * n as i32 + 1)? * &self.w).inv()?,
            Op::P => alternating(self.e, n),
            Op::Lower => rho_at(n, &self.s, &self.w)?,
            Op::Raise => Scalar::one(),
        };
        self.diag.insert((op, n), c.clone());
        Ok(c)
    }

    fn step(&mut self, op: Op, n: u32) -> Result<Option<(u32, Scalar)>> {
        Ok(match op {
            Op::Raise if self.top == Some(n) => None,
            Op::Raise => Some((n + 1, Scalar::one())),
            Op::Lower if n == 0 => None,
            Op::Lower => Some((n - 1, self.coeff(op, n)?)),
            _ => Some((n, self.coeff(op, n)?)),
        })
    }

    /// A word maps each basis vector to a multiple of a basis vector. Letters
    /// of `w` are indices into `OPS`.
    fn word_on_basis(&mut self, w: &Word, n: u32) -> Result<Option<(u32, Scalar)>> {
        if w.is_empty() {
            return Ok(Some((n, Scalar::one())));
        }
        let key = (w.clone(), n);
        if let Some(r) = self.words.get(&key) {
            return Ok(r.clone());
        }
        let letters = w.letters();
        let op = OPS[letters[letters.len() - 1] as usize];
        let r = match self.step(op, n)? {
            None => None,
            Some((m, c)) => {
                let rest = Word::from_slice(&letters[..letters.len() - 1]);
                self.word_on_basis(&rest, m)?.map(|(k, d)| (k, &c * &d))
            }
        };
        self.words.insert(key, r.clone());
        Ok(r)
    }

    /// Image of f_n under x.
    pub fn act_basis(&mut self, x: &NCExpr, n: u32) -> Result<RepVector> {
        if let Some(t) = self.top {
            if n > t {
                return Err(Error::Truncation(format!("basis index {n} exceeds {t}")));
            }
        }
        let ops = ops_of_checked(x)?;
        let mut out = RepVector::zero(self.e);
        for (w, c) in x.terms() {
            let coded = Word(w.letters().iter().map(|&g| op_code(ops[g as usize].expect("checked"))).collect());
            if let Some((m, d)) = self.word_on_basis(&coded, n)? {
                let c = match &self.at {
                    Some(b) => c.substitute(b)?,
                    None => c.clone(),
                };
                out.add_term(m, &c * &d);
            }
        }
        Ok(out)
    }

    pub fn act(&mut self, x: &NCExpr, v: &RepVector) -> Result<RepVector> {
        let mut out = RepVector::zero(self.e);
        for (n, c) in v.entries() {
            for (m, d) in self.act_basis(x, n)?.entries() {
                out.add_term(m, c * d);
            }
        }
        Ok(out)
    }

    /// Matrix of x on span{f_0..f_N}; column j is the image of f_j.
    pub fn matrix(&mut self, x: &NCExpr) -> Result<RepMatrix> {
        let top = self.top.ok_or_else(|| Error::Truncation("module is infinite-dimensional".into()))?;
        let d = top as usize + 1;
        let mut entries = vec![vec![Scalar::zero(); d]; d];
        for j in 0..d {
            for (i, c) in self.act_basis(x, j as u32)?.entries() {
                entries[i as usize][j] = c.clone();
            }
        }
        Ok(RepMatrix { n: top, e: self.e, entries })
    }
}

fn ops_of_checked(x: &NCExpr) -> Result<Vec<Option<Op>>> {
    let ops = ops_of(x)?;
    for (w, _) in x.terms() {
        for &g in w.letters() {
            if ops[g as usize].is_none() {
                return Err(Error::MissingImage(x.alphabet().name_of(g).to_string()));
            }
        }
    }
    Ok(ops)
}

/// Dense exact matrix of an element on a finite module.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrix {
    n: u32,
    e: Parity,
    entries: Vec<Vec<Scalar>>,
}

impl RepMatrix {
    pub fn from_rows(n: u32, e: Parity, entries: Vec<Vec<Scalar>>) -> RepMatrix {
        RepMatrix { n, e, entries }
    }

    pub fn truncation(&self) -> u32 {
        self.n
    }

    pub fn parity(&self) -> Parity {
        self.e
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Scalar::is_zero)
    }

    /// True iff the matrix is c·Id.
    pub fn is_scalar(&self, c: &Scalar) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| if i == j { x == c } else { x.is_zero() })
        })
    }

    pub fn mul(&self, o: &RepMatrix) -> RepMatrix {
        let d = self.dim();
        let mut entries = vec![vec![Scalar::zero(); d]; d];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = Scalar::zero();
                for k in 0..d {
                    if !self.entries[i][k].is_zero() && !o.entries[k][j].is_zero() {
                        acc = &acc + &(&self.entries[i][k] * &o.entries[k][j]);
                    }
                }
                *cell = acc;
            }
        }
        RepMatrix { n: self.n, e: self.e, entries }
    }

    /// Grid of canonical scalar strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|r| r.iter().map(Scalar::to_string).collect()).collect()
    }
}

/// Image of v under x in W^(e,ν), e taken from v.
pub fn act_w(x: &NCExpr, v: &RepVector) -> Result<RepVector> {
    Module::infinite(v.parity()).act(x, v)
}

/// Matrix of x in the (N+1)-dimensional representation.
pub fn finite_matrix(x: &NCExpr, n: i64, e: Parity) -> Result<RepMatrix> {
    Module::finite(n, e)?.matrix(x)
}

/// Matrix of x in the (N+1)-dimensional representation with s set to a value.
pub fn finite_matrix_at(x: &NCExpr, n: i64, e: Parity, s: &Scalar) -> Result<RepMatrix> {
    Module::finite_at(n, e, s.clone())?.matrix(x)
}

/// Applies x in the Bargmann realization with formal s and w.
pub fn bargmann_apply(x: &NCExpr, p: &BargmannPoly, e: Parity) -> Result<BargmannPoly> {
    let ops = ops_of_checked(x)?;
    let s = Scalar::symbol(Symbol::S);
    let w = Scalar::symbol(Symbol::W);
    let mut out = BargmannPoly::default();
    for (word, c) in x.terms() {
        let mut cur = p.clone();
        for &g in word.letters().iter().rev() {
            cur = bargmann_op(ops[g as usize].expect("checked"), &cur, e, &s, &w)?;
        }
        out = out.add(&cur.scale(c));
    }
    Ok(out)
}

fn bargmann_op(op: Op, p: &BargmannPoly, e: Parity, s: &Scalar, w: &Scalar) -> Result<BargmannPoly> {
    let tq = |n: u32, sign: i32| s.pow(sign * 2 * n as i32).expect("s is invertible");
    let rz = |n: u32| if n % 2 == 0 { Scalar::one() } else { Scalar::from_int(-1) };
    Ok(match op {
        Op::Raise => p.times_z(),
        Op::K => p.map_diag(|n| tq(n, 1)).scale(&(s * w)),
        Op::Kinv => p.map_diag(|n| tq(n, -1)).scale(&(s * w).inv()?),
        Op::P => p.map_diag(rz).scale(&Scalar::from_int(e.sign())),
        Op::Lower => {
            let qq = &s.pow(2)? - &s.pow(-2)?;
            let up = p.map_diag(|n| &tq(n, 1) - &rz(n)).div_z().expect("(T_q - R_z) kills constants");
            let down = p.map_diag(|n| &tq(n, -1) - &rz(n)).div_z().expect("(T_q^-1 - R_z) kills constants");
            up.scale(&w.div(&qq)?).add(&down.scale(&-(w.inv()?.div(&qq)?)))
        }
    })
}

/// Nullity of a linear system given by its rows, by exact elimination.
pub fn nullity(rows: &[Vec<Scalar>], unknowns: usize) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut rank = 0;
    for col in 0..unknowns {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][col].inv().expect("pivot is nonzero");
        let pivot_row: Vec<Scalar> = m[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x = &*x - &(&f * p);
                    }
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    unknowns - rank
}

/// Dimension of the space of matrices commuting with every given matrix.
pub fn commutant_dimension(mats: &[RepMatrix]) -> usize {
    let d = mats.first().map(RepMatrix::dim).unwrap_or(0);
    let idx = |i: usize, j: usize| i * d + j;
    let mut rows = Vec::new();
    for g in mats {
        // (G C - C G)_{ij} = Σ_k G_ik C_kj - C_ik G_kj
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![Scalar::zero(); d * d];
                for k in 0..d {
                    row[idx(k, j)] = &row[idx(k, j)] + g.get(i, k);
                    row[idx(i, k)] = &row[idx(i, k)] - g.get(k, j);
                }
                rows.push(row);
            }
        }
    }
    nullity(&rows, d * d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepKind {
    WRelations,
    WEquitable,
    WCasimir,
    BargmannConsistency,
    FiniteIrreducibility,
}

impl RepKind {
    pub const ALL: [RepKind; 5] = [
        RepKind::WRelations,
        RepKind::WEquitable,
        RepKind::WCasimir,
        RepKind::BargmannConsistency,
        RepKind::FiniteIrreducibility,
    ];

    pub fn key(self) -> &'static str {
        match self {
            RepKind::WRelations => "W_relations",
            RepKind::WEquitable => "W_equitable",
            RepKind::WCasimir => "W_casimir",
            RepKind::BargmannConsistency => "bargmann_consistency",
            RepKind::FiniteIrreducibility => "finite_irreducibility",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RepEntry {
    pub label: String,
    pub holds: bool,
    pub detail: String,
}

fn entry(label: impl Into<String>, failures: Vec<String>) -> RepEntry {
    RepEntry { label: label.into(), holds: failures.is_empty(), detail: failures.join("; ") }
}

/// Numeric point used for the irreducibility check.
pub fn generic_s() -> Scalar {
    Scalar::from_int(2)
}

pub fn check_rep(kind: RepKind, cutoff: u32, n: Option<i64>) -> Result<Vec<RepEntry>> {
    if cutoff < 1 {
        return Err(Error::Truncation("cutoff must be at least 1".into()));
    }
    let ospq = presentations::ospq();
    let el = |name: &str| catalog::element_in("ospq", name).map(|e| e.expr.clone());
    let s = Scalar::symbol(Symbol::S);
    let w = Scalar::symbol(Symbol::W);
    let mut out = Vec::new();
    match kind {
        RepKind::WRelations => {
            let rels = ospq.relations();
            for (k, rel) in rels.iter().enumerate() {
                let (a, b) = ospq.rules()[k].lhs;
                let label = format!("{}{}", ospq.alphabet().name_of(a), ospq.alphabet().name_of(b));
                let mut bad = Vec::new();
                for e in Parity::BOTH {
                    let mut m = Module::infinite(e);
                    for j in 0..=cutoff {
                        if !m.act_basis(rel, j)?.is_zero() {
                            bad.push(format!("e={} n={j}", e.sign()));
                        }
                    }
                }
                out.push(entry(label, bad));
            }
        }
        RepKind::WEquitable => {
            let (x, y, z) = (el("X")?, el("Y")?, el("Z")?);
            let one_minus_qinv = &Scalar::one() - &Scalar::s_pow(-2);
            let mut bad: HashMap<&str, Vec<String>> = HashMap::new();
            for e in Parity::BOTH {
                let mut m = Module::infinite(e);
                for j in 0..=cutoff {
                    let sign = alternating(e, j);
                    let kdiag = &s.pow(2 * j as i32 + 1)? * &w;
                    let kinv = kdiag.inv()?;
                    let mut want_x = RepVector::zero(e);
                    want_x.add_term(j, &sign * &kinv);
                    want_x.add_term(j + 1, -(&(&sign * &kinv) * &one_minus_qinv));
                    let mut want_y = RepVector::zero(e);
                    want_y.add_term(j, &sign * &kdiag);
                    let mut want_z = RepVector::zero(e);
                    want_z.add_term(j, &sign * &kinv);
                    if j > 0 {
                        want_z.add_term(j - 1, &(&sign * &(&s + &s.inv()?)) * &rho(j));
                    }
                    for (name, elt, want) in [("X", &x, want_x), ("Y", &y, want_y), ("Z", &z, want_z)] {
                        if m.act_basis(elt, j)? != want {
                            bad.entry(name).or_default().push(format!("e={} n={j}", e.sign()));
                        }
                    }
                }
            }
            for name in ["X", "Y", "Z"] {
                out.push(entry(name, bad.remove(name).unwrap_or_default()));
            }
        }
        RepKind::WCasimir => {
            let q = el("Q")?;
            let nu = q_nu(&s, &w)?;
            for e in Parity::BOTH {
                let mut m = Module::infinite(e);
                let ev = -(&Scalar::from_int(e.sign()) * &nu);
                let mut bad = Vec::new();
                for j in 0..=cutoff {
                    if m.act_basis(&q, j)? != RepVector::basis(j, e).scale(&ev) {
                        bad.push(format!("n={j}"));
                    }
                }
                out.push(entry(format!("e{}", sign_text(e)), bad));
            }
        }
        RepKind::BargmannConsistency => {
            for g in ospq.alphabet().generators() {
                let x = NCExpr::generator(ospq.alphabet(), g);
                let mut bad = Vec::new();
                for e in Parity::BOTH {
                    let mut m = Module::infinite(e);
                    for j in 0..=cutoff {
                        let via_z = bargmann_apply(&x, &BargmannPoly::monomial(j), e)?.to_rep_vector(e);
                        if via_z != m.act_basis(&x, j)? {
                            bad.push(format!("e={} n={j}", e.sign()));
                        }
                    }
                }
                out.push(entry(ospq.alphabet().name_of(g), bad));
            }
        }
        RepKind::FiniteIrreducibility => {
            let n = n.unwrap_or(2);
            let gens = [ospq.generator("A+"), ospq.generator("A-")];
            let mut m = Module::finite_at(n, Parity::Plus, generic_s())?;
            let mats: Vec<RepMatrix> = gens.iter().map(|g| m.matrix(g)).collect::<Result<_>>()?;
            let dim = commutant_dimension(&mats);
            let failures = if dim == 1 { vec![] } else { vec![format!("commutant dimension {dim}")] };
            out.push(entry(format!("N{n}"), failures));
        }
    }
    Ok(out)
}

fn sign_text(e: Parity) -> &'static str {
    match e {
        Parity::Plus => "+1",
        Parity::Minus => "-1",
    }
}

/// Where `x` fails to act as zero: on f_0..f_cutoff of W^(e,ν) and on the
/// finite modules of the given sizes, for both parities.
pub fn vanishing_failures(x: &NCExpr, cutoff: u32, sizes: &[i64]) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for e in Parity::BOTH {
        let mut m = Module::infinite(e);
        for j in 0..=cutoff {
            if !m.act_basis(x, j)?.is_zero() {
                bad.push(format!("W e={} n={j}", e.sign()));
            }
        }
        for &n in sizes {
            if !finite_matrix(x, n, e)?.is_zero() {
                bad.push(format!("N={n} e={}", e.sign()));
            }
        }
    }
    Ok(bad)
}

/// −e[ν]_q at w = s^-(N+1), the expected Casimir eigenvalue on the finite module.
pub fn finite_casimir_value(n: i64, e: Parity) -> Result<Scalar> {
    let s = Scalar::symbol(Symbol::S);
    let w = s.pow(-(n as i32 + 1))?;
    Ok(-(&Scalar::from_int(e.sign()) * &q_nu(&s, &w)?))
}
