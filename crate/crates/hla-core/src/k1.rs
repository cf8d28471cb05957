//! Windowed relation checker for the infinite-dimensional family with even
//! generators `eps[n]` and odd generators `a[i]`, `i` a half-integer.
//!
//! Products: `eps[n]*eps[m] = eps[n+m]`, `eps[n]*a[i] = 1/2 (1+q^i) a[n+i]`,
//! `[a[i], a[j]] = 1/2 ({j}-{i}) eps[i+j]` with `{i} = (q^i - 1)/(q - 1)`;
//! twists `alpha = id`, `beta(a[i]) = (1+q^i) a[i]`.
//!
//! Coefficients live in the exact quadratic extension `Q[r]/(r^2 - q)`, so
//! `q^i = r^(2i)` is exact for half-integer `i` even when `q` is a square.
//!
//! The family is infinite-dimensional, so no finite structure-constant table
//! exists. Instead, each identity instance on generators is evaluated only
//! when every intermediate product stays inside the index window
//! `|n| <= N`, `|i| <= N - 1/2`; instances that escape are counted as
//! skipped, never treated as zero.

use crate::algebra::builtins::ParamError;
use crate::report::Witness;
use crate::scalar::{format_rational, rat, Scalar};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Element `a + b*r` of `Q[r]/(r^2 - q)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QNum {
    pub a: Scalar,
    pub b: Scalar,
}

impl QNum {
    pub fn zero() -> Self {
        QNum { a: Scalar::zero(), b: Scalar::zero() }
    }

    pub fn one() -> Self {
        QNum { a: Scalar::one(), b: Scalar::zero() }
    }

    pub fn from_rational(a: Scalar) -> Self {
        QNum { a, b: Scalar::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &QNum) -> QNum {
        QNum { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    pub fn sub(&self, o: &QNum) -> QNum {
        QNum { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    pub fn neg(&self) -> QNum {
        QNum { a: -self.a.clone(), b: -self.b.clone() }
    }

    /// Product modulo `r^2 = q`.
    pub fn mul(&self, o: &QNum, q: &Scalar) -> QNum {
        QNum {
            a: &self.a * &o.a + &(&self.b * &o.b) * q,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    pub fn scale(&self, c: &Scalar) -> QNum {
        QNum { a: &self.a * c, b: &self.b * c }
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let r_part = |b: &Scalar| -> String {
            if b == &Scalar::one() {
                "r".into()
            } else if b == &(-Scalar::one()) {
                "-r".into()
            } else {
                format!("{}*r", format_rational(b))
            }
        };
        if self.b.is_zero() {
            format_rational(&self.a)
        } else if self.a.is_zero() {
            r_part(&self.b)
        } else if self.b > Scalar::zero() {
            format!("{} + {}", format_rational(&self.a), r_part(&self.b))
        } else {
            format!("{} - {}", format_rational(&self.a), r_part(&-self.b.clone()))
        }
    }
}

/// Sparse window element: even coordinates keyed by the integer index,
/// odd coordinates keyed by twice the half-integer index (always odd).
/// `escaped` records that some nonzero term left the window.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WindowElement {
    pub even: BTreeMap<i64, QNum>,
    pub odd: BTreeMap<i64, QNum>,
    pub escaped: bool,
}

impl WindowElement {
    fn empty() -> Self {
        WindowElement { even: BTreeMap::new(), odd: BTreeMap::new(), escaped: false }
    }

    fn normalized(mut self) -> Self {
        self.even.retain(|_, c| !c.is_zero());
        self.odd.retain(|_, c| !c.is_zero());
        self
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }
}

/// Outcome of a single identity instance on generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Outcome {
    Holds,
    Skipped,
    Violated(Witness),
}

/// Tally for one identity over the whole window sweep.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Tally {
    pub held: usize,
    pub skipped: usize,
    pub violated: usize,
}

#[derive(Clone, Debug)]
pub struct WindowReport {
    pub q: Scalar,
    pub radius: i64,
    pub tallies: BTreeMap<String, Tally>,
    pub violations: Vec<Witness>,
}

impl WindowReport {
    pub fn all_hold(&self) -> bool {
        self.violations.is_empty()
    }
}

pub struct K1Window {
    q: Scalar,
    radius: i64,
}

impl K1Window {
    /// `q` must avoid 0 and 1 (the bracket constant divides by `q - 1`);
    /// `radius` is the even-index bound `N >= 1`.
    pub fn new(q: Scalar, radius: i64) -> Result<Self, ParamError> {
        if q.is_zero() || q.is_one() {
            return Err(ParamError::BadQ);
        }
        if radius < 1 {
            return Err(ParamError::BadWindow);
        }
        Ok(K1Window { q, radius })
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn even_indices(&self) -> Vec<i64> {
        (-self.radius..=self.radius).collect()
    }

    /// Doubled odd indices: odd integers `i2` with `|i2| <= 2N - 1`.
    pub fn odd_indices(&self) -> Vec<i64> {
        (-(2 * self.radius - 1)..=2 * self.radius - 1)
            .filter(|k| k.rem_euclid(2) == 1)
            .collect()
    }

    fn even_in_window(&self, n: i64) -> bool {
        n.abs() <= self.radius
    }

    fn odd_in_window(&self, i2: i64) -> bool {
        i2.abs() <= 2 * self.radius - 1
    }

    /// `r^k` for any integer `k`, reduced to `q^(k div 2) * r^(k mod 2)`.
    pub fn r_pow(&self, k: i64) -> QNum {
        let m = k.div_euclid(2);
        let rem = k.rem_euclid(2);
        let mut base = Scalar::one();
        if m >= 0 {
            for _ in 0..m {
                base *= &self.q;
            }
        } else {
            let inv = self.q.clone().recip();
            for _ in 0..(-m) {
                base *= &inv;
            }
        }
        if rem == 0 {
            QNum { a: base, b: Scalar::zero() }
        } else {
            QNum { a: Scalar::zero(), b: base }
        }
    }

    /// `{i} = (q^i - 1)/(q - 1)` with `i = i2/2`.
    fn bracket_symbol(&self, i2: i64) -> QNum {
        let num = self.r_pow(i2).sub(&QNum::one());
        let den = (&self.q - Scalar::one()).recip();
        num.scale(&den)
    }

    pub fn even_gen(&self, n: i64) -> WindowElement {
        assert!(self.even_in_window(n), "generator outside window");
        let mut e = WindowElement::empty();
        e.even.insert(n, QNum::one());
        e
    }

    pub fn odd_gen(&self, i2: i64) -> WindowElement {
        assert!(i2.rem_euclid(2) == 1, "odd index must be half-integral");
        assert!(self.odd_in_window(i2), "generator outside window");
        let mut e = WindowElement::empty();
        e.odd.insert(i2, QNum::one());
        e
    }

    fn add_even_term(&self, out: &mut WindowElement, n: i64, c: QNum) {
        if c.is_zero() {
            return;
        }
        if !self.even_in_window(n) {
            out.escaped = true;
            return;
        }
        let entry = out.even.entry(n).or_insert_with(QNum::zero);
        *entry = entry.add(&c);
    }

    fn add_odd_term(&self, out: &mut WindowElement, i2: i64, c: QNum) {
        if c.is_zero() {
            return;
        }
        if !self.odd_in_window(i2) {
            out.escaped = true;
            return;
        }
        let entry = out.odd.entry(i2).or_insert_with(QNum::zero);
        *entry = entry.add(&c);
    }

    /// Product of even parts: `eps[n]*eps[m] = eps[n+m]`.
    pub fn mul_ee(&self, x: &WindowElement, y: &WindowElement) -> WindowElement {
        let mut out = WindowElement::empty();
        out.escaped = x.escaped || y.escaped;
        for (n, cn) in &x.even {
            for (m, cm) in &y.even {
                self.add_even_term(&mut out, n + m, cn.mul(cm, &self.q));
            }
        }
        out.normalized()
    }

    /// Mixed product: `eps[n]*a[i] = 1/2 (1+q^i) a[n+i]`.
    pub fn mul_eo(&self, x: &WindowElement, y: &WindowElement) -> WindowElement {
        let mut out = WindowElement::empty();
        out.escaped = x.escaped || y.escaped;
        let half = rat(1, 2);
        for (n, cn) in &x.even {
            for (i2, ci) in &y.odd {
                let factor = QNum::one().add(&self.r_pow(*i2)).scale(&half);
                let c = cn.mul(ci, &self.q).mul(&factor, &self.q);
                self.add_odd_term(&mut out, 2 * n + i2, c);
            }
        }
        out.normalized()
    }

    /// Bracket: `[a[i], a[j]] = 1/2 ({j} - {i}) eps[i+j]`.
    pub fn bracket(&self, x: &WindowElement, y: &WindowElement) -> WindowElement {
        let mut out = WindowElement::empty();
        out.escaped = x.escaped || y.escaped;
        let half = rat(1, 2);
        for (i2, ci) in &x.odd {
            for (j2, cj) in &y.odd {
                let factor = self
                    .bracket_symbol(*j2)
                    .sub(&self.bracket_symbol(*i2))
                    .scale(&half);
                let c = ci.mul(cj, &self.q).mul(&factor, &self.q);
                self.add_even_term(&mut out, (i2 + j2) / 2, c);
            }
        }
        out.normalized()
    }

    /// `alpha` fixes every `eps[n]`.
    pub fn alpha(&self, x: &WindowElement) -> WindowElement {
        x.clone()
    }

    /// `beta(a[i]) = (1+q^i) a[i]`.
    pub fn beta(&self, y: &WindowElement) -> WindowElement {
        let mut out = WindowElement::empty();
        out.escaped = y.escaped;
        for (i2, c) in &y.odd {
            let factor = QNum::one().add(&self.r_pow(*i2));
            self.add_odd_term(&mut out, *i2, c.mul(&factor, &self.q));
        }
        out.normalized()
    }

    fn scale(&self, x: &WindowElement, c: &Scalar) -> WindowElement {
        let mut out = x.clone();
        for v in out.even.values_mut() {
            *v = v.scale(c);
        }
        for v in out.odd.values_mut() {
            *v = v.scale(c);
        }
        out.normalized()
    }

    fn add(&self, x: &WindowElement, y: &WindowElement) -> WindowElement {
        let mut out = x.clone();
        out.escaped = x.escaped || y.escaped;
        for (n, c) in &y.even {
            let entry = out.even.entry(*n).or_insert_with(QNum::zero);
            *entry = entry.add(c);
        }
        for (i2, c) in &y.odd {
            let entry = out.odd.entry(*i2).or_insert_with(QNum::zero);
            *entry = entry.add(c);
        }
        out.normalized()
    }

    pub fn render_element(&self, x: &WindowElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (n, c) in &x.even {
            parts.push(render_term(c, &format!("eps[{n}]")));
        }
        for (i2, c) in &x.odd {
            parts.push(render_term(c, &format!("a[{}]", half_name(*i2))));
        }
        parts.join(" + ")
    }

    fn outcome(
        &self,
        identity: &str,
        tuple: Vec<String>,
        lhs: &WindowElement,
        rhs: &WindowElement,
    ) -> Outcome {
        if lhs.escaped || rhs.escaped {
            return Outcome::Skipped;
        }
        if lhs == rhs {
            Outcome::Holds
        } else {
            Outcome::Violated(Witness {
                identity: identity.into(),
                tuple,
                lhs: self.render_element(lhs),
                rhs: self.render_element(rhs),
            })
        }
    }

    /// alpha(eps[n]) * (eps[m] * eps[p]) = (eps[n] * eps[m]) * alpha(eps[p]).
    pub fn even_assoc_instance(&self, n: i64, m: i64, p: i64) -> Outcome {
        let (en, em, ep) = (self.even_gen(n), self.even_gen(m), self.even_gen(p));
        let lhs = self.mul_ee(&self.alpha(&en), &self.mul_ee(&em, &ep));
        let rhs = self.mul_ee(&self.mul_ee(&en, &em), &self.alpha(&ep));
        self.outcome(
            "even_assoc",
            vec![format!("eps[{n}]"), format!("eps[{m}]"), format!("eps[{p}]")],
            &lhs,
            &rhs,
        )
    }

    /// alpha(eps[n]) * (eps[m] * a[i]) = 1/2 (eps[n] * eps[m]) * beta(a[i]).
    pub fn mixed_assoc_instance(&self, n: i64, m: i64, i2: i64) -> Outcome {
        let (en, em, ai) = (self.even_gen(n), self.even_gen(m), self.odd_gen(i2));
        let lhs = self.mul_eo(&self.alpha(&en), &self.mul_eo(&em, &ai));
        let rhs = self.scale(
            &self.mul_eo(&self.mul_ee(&en, &em), &self.beta(&ai)),
            &rat(1, 2),
        );
        self.outcome(
            "mixed_assoc",
            vec![
                format!("eps[{n}]"),
                format!("eps[{m}]"),
                format!("a[{}]", half_name(i2)),
            ],
            &lhs,
            &rhs,
        )
    }

    /// alpha(eps[n]) * [a[i], a[j]]
    ///   = [eps[n] * a[i], beta(a[j])] + [beta(a[i]), eps[n] * a[j]].
    pub fn bracket_leibniz_instance(&self, n: i64, i2: i64, j2: i64) -> Outcome {
        let (en, ai, aj) = (self.even_gen(n), self.odd_gen(i2), self.odd_gen(j2));
        let lhs = self.mul_ee(&self.alpha(&en), &self.bracket(&ai, &aj));
        let t1 = self.bracket(&self.mul_eo(&en, &ai), &self.beta(&aj));
        let t2 = self.bracket(&self.beta(&ai), &self.mul_eo(&en, &aj));
        let rhs = self.add(&t1, &t2);
        self.outcome(
            "bracket_leibniz",
            vec![
                format!("eps[{n}]"),
                format!("a[{}]", half_name(i2)),
                format!("a[{}]", half_name(j2)),
            ],
            &lhs,
            &rhs,
        )
    }

    /// Cyclic sum of beta(a[i]) * [a[j], a[k]] over (i, j, k).
    pub fn odd_jacobi_instance(&self, i2: i64, j2: i64, k2: i64) -> Outcome {
        let term = |p2: i64, q2: i64, r2: i64| {
            self.mul_eo(
                &self.bracket(&self.odd_gen(q2), &self.odd_gen(r2)),
                &self.beta(&self.odd_gen(p2)),
            )
        };
        let sum = self.add(
            &self.add(&term(i2, j2, k2), &term(j2, k2, i2)),
            &term(k2, i2, j2),
        );
        let zero = WindowElement::empty();
        self.outcome(
            "odd_jacobi",
            vec![
                format!("a[{}]", half_name(i2)),
                format!("a[{}]", half_name(j2)),
                format!("a[{}]", half_name(k2)),
            ],
            &sum,
            &zero,
        )
    }

    /// Sweep every in-window generator tuple of each identity signature.
    pub fn check(&self) -> WindowReport {
        let mut report = WindowReport {
            q: self.q.clone(),
            radius: self.radius,
            tallies: BTreeMap::new(),
            violations: Vec::new(),
        };
        let tally = |report: &mut WindowReport, name: &str, outcome: Outcome| {
            let t = report.tallies.entry(name.into()).or_default();
            match outcome {
                Outcome::Holds => t.held += 1,
                Outcome::Skipped => t.skipped += 1,
                Outcome::Violated(w) => {
                    t.violated += 1;
                    report.violations.push(w);
                }
            }
        };
        let evens = self.even_indices();
        let odds = self.odd_indices();
        for &n in &evens {
            for &m in &evens {
                for &p in &evens {
                    let o = self.even_assoc_instance(n, m, p);
                    tally(&mut report, "even_assoc", o);
                }
                for &i2 in &odds {
                    let o = self.mixed_assoc_instance(n, m, i2);
                    tally(&mut report, "mixed_assoc", o);
                }
            }
            for &i2 in &odds {
                for &j2 in &odds {
                    let o = self.bracket_leibniz_instance(n, i2, j2);
                    tally(&mut report, "bracket_leibniz", o);
                }
            }
        }
        for &i2 in &odds {
            for &j2 in &odds {
                for &k2 in &odds {
                    let o = self.odd_jacobi_instance(i2, j2, k2);
                    tally(&mut report, "odd_jacobi", o);
                }
            }
        }
        report
    }
}

fn half_name(i2: i64) -> String {
    format!("{i2}/2")
}

fn render_term(c: &QNum, name: &str) -> String {
    if c == &QNum::one() {
        name.into()
    } else if c == &QNum::one().neg() {
        format!("-{name}")
    } else if !c.a.is_zero() && !c.b.is_zero() {
        format!("({})*{name}", c.render())
    } else {
        format!("{}*{name}", c.render())
    }
}
