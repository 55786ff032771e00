use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;

use super::element::{Element, Word};
use crate::error::{QgwError, Result};
use crate::scalars::Scalar;
use crate::stats;

pub const DEFAULT_STEP_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u8,
    pub nilpotent: bool,
    pub inverse: Option<u8>,
    pub weight: i32,
}

/// Generators plus hand-given rules, before compilation.
#[derive(Clone, Debug, Default)]
pub struct Skeleton {
    pub name: String,
    pub gens: Vec<Generator>,
    pub rules: Vec<((u8, u8), Element)>,
}

impl Skeleton {
    pub fn new(name: &str) -> Self {
        Skeleton { name: name.to_string(), ..Default::default() }
    }

    pub fn gen(&mut self, name: &str, degree: u8) -> u8 {
        assert!(self.gens.len() < 255, "too many generators");
        self.gens.push(Generator {
            name: name.to_string(),
            degree,
            nilpotent: false,
            inverse: None,
            weight: 1,
        });
        (self.gens.len() - 1) as u8
    }

    /// Adds `inv_name` and `name` (in that order) as a mutually inverse even pair.
    pub fn invertible(&mut self, name: &str) -> (u8, u8) {
        let inv = self.gen(&format!("{name}^-1"), 0);
        let g = self.gen(name, 0);
        self.gens[inv as usize].inverse = Some(g);
        self.gens[g as usize].inverse = Some(inv);
        (inv, g)
    }

    pub fn nilpotent(&mut self, g: u8) {
        self.gens[g as usize].nilpotent = true;
    }

    pub fn weight(&mut self, g: u8, w: i32) {
        self.gens[g as usize].weight = w;
    }

    pub fn index(&self, name: &str) -> Option<u8> {
        self.gens.iter().position(|g| g.name == name).map(|i| i as u8)
    }

    pub fn rule(&mut self, a: u8, b: u8, rhs: Element) {
        self.rules.push(((a, b), rhs));
    }

    /// Validates order-decrease of every rule and freezes the presentation.
    pub fn build(self) -> Result<Presentation> {
        Presentation::from_skeleton(self, DEFAULT_STEP_CAP)
    }
}

/// A finitely presented graded algebra with a terminating two-letter rewrite system.
pub struct Presentation {
    pub name: String,
    gens: Vec<Generator>,
    rules: Vec<Option<Element>>,
    step_cap: u64,
    cache: DashMap<(Word, u8), Element>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("name", &self.name)
            .field("gens", &self.gens.iter().map(|g| &g.name).collect::<Vec<_>>())
            .field("rules", &self.rule_list().len())
            .finish()
    }
}

pub type Pres = Arc<Presentation>;

impl Presentation {
    pub fn from_skeleton(sk: Skeleton, step_cap: u64) -> Result<Self> {
        let n = sk.gens.len();
        let mut rules: Vec<Option<Element>> = vec![None; n * n];
        for (i, g) in sk.gens.iter().enumerate() {
            if g.nilpotent {
                rules[i * n + i] = Some(Element::zero());
            }
            if let Some(j) = g.inverse {
                rules[i * n + j as usize] = Some(Element::one());
            }
        }
        let p = Presentation {
            name: sk.name,
            gens: sk.gens,
            rules: Vec::new(),
            step_cap,
            cache: DashMap::new(),
        };
        for ((a, b), rhs) in sk.rules {
            let lhs = vec![a, b];
            for (w, _) in rhs.terms() {
                if p.cmp_words(w, &lhs) != Ordering::Less {
                    return Err(QgwError::NonTerminatingOrder(format!(
                        "{} -> ... {}",
                        p.word_string(&lhs),
                        p.word_string(w)
                    )));
                }
            }
            rules[a as usize * n + b as usize] = Some(rhs);
        }
        Ok(Presentation { rules, ..p })
    }

    pub fn with_step_cap(mut self, cap: u64) -> Self {
        self.step_cap = cap;
        self
    }

    pub fn into_pres(self) -> Pres {
        Arc::new(self)
    }

    /// Copy of generators and rules for extension.
    pub fn to_skeleton(&self) -> Skeleton {
        let mut sk = Skeleton { name: self.name.clone(), gens: self.gens.clone(), rules: Vec::new() };
        for ((a, b), rhs) in self.rule_list() {
            let ga = &self.gens[a as usize];
            let builtin = (a == b && ga.nilpotent && rhs.is_zero())
                || (ga.inverse == Some(b) && *rhs == Element::one());
            if !builtin {
                sk.rules.push(((a, b), rhs.clone()));
            }
        }
        sk
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn step_cap(&self) -> u64 {
        self.step_cap
    }

    pub fn index(&self, name: &str) -> Option<u8> {
        self.gens.iter().position(|g| g.name == name).map(|i| i as u8)
    }

    pub fn idx(&self, name: &str) -> Result<u8> {
        self.index(name).ok_or_else(|| QgwError::UnknownName(name.to_string()))
    }

    /// The generator as an element.
    pub fn g(&self, name: &str) -> Result<Element> {
        Ok(Element::letter(self.idx(name)?))
    }

    /// Word from generator names, as an element with coefficient 1 (not normalized).
    pub fn w(&self, names: &[&str]) -> Result<Element> {
        let w = names.iter().map(|n| self.idx(n)).collect::<Result<Word>>()?;
        Ok(Element::word(w, Scalar::one()))
    }

    pub fn rule(&self, a: u8, b: u8) -> Option<&Element> {
        self.rules[a as usize * self.gens.len() + b as usize].as_ref()
    }

    pub fn rule_list(&self) -> Vec<((u8, u8), &Element)> {
        let n = self.gens.len();
        self.rules
            .iter()
            .enumerate()
            .filter_map(|(k, r)| r.as_ref().map(|r| (((k / n) as u8, (k % n) as u8), r)))
            .collect()
    }

    pub fn word_weight(&self, w: &[u8]) -> i64 {
        w.iter().map(|&g| self.gens[g as usize].weight as i64).sum()
    }

    /// Term order: weighted degree, then length, then lexicographic by index.
    pub fn cmp_words(&self, a: &[u8], b: &[u8]) -> Ordering {
        self.word_weight(a)
            .cmp(&self.word_weight(b))
            .then(a.len().cmp(&b.len()))
            .then_with(|| a.cmp(b))
    }

    pub fn word_degree(&self, w: &[u8]) -> u8 {
        w.iter().fold(0, |acc, &g| acc ^ self.gens[g as usize].degree)
    }

    /// ℤ2-degree when homogeneous, `None` for mixed elements. Zero counts as even.
    pub fn degree(&self, e: &Element) -> Option<u8> {
        let mut deg = None;
        for (w, _) in e.terms() {
            let d = self.word_degree(w);
            match deg {
                None => deg = Some(d),
                Some(x) if x != d => return None,
                _ => {}
            }
        }
        Some(deg.unwrap_or(0))
    }

    /// Splits into (even part, odd part).
    pub fn split_degree(&self, e: &Element) -> (Element, Element) {
        let mut even = Element::zero();
        let mut odd = Element::zero();
        for (w, c) in e.terms() {
            if self.word_degree(w) == 0 {
                even.add_term(w.clone(), c);
            } else {
                odd.add_term(w.clone(), c);
            }
        }
        (even, odd)
    }

    pub fn is_normal_word(&self, w: &[u8]) -> bool {
        w.windows(2).all(|p| self.rule(p[0], p[1]).is_none())
    }

    pub fn is_normal(&self, e: &Element) -> bool {
        e.terms().all(|(w, _)| self.is_normal_word(w))
    }

    pub fn word_string(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&g| self.gens[g as usize].name.as_str()).collect::<Vec<_>>().join("*")
    }

    pub fn show(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".into();
        }
        e.terms()
            .map(|(w, c)| {
                if w.is_empty() {
                    format!("({c})")
                } else if c.is_one() {
                    self.word_string(w)
                } else {
                    format!("({c})*{}", self.word_string(w))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Inverse of a word made of invertible letters.
    pub fn word_inverse(&self, w: &[u8]) -> Option<Word> {
        w.iter().rev().map(|&g| self.gens[g as usize].inverse).collect()
    }

    pub fn clear_cache(&self) {
        self.cache.clear();
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }
}

struct Budget {
    steps: u64,
    cap: u64,
}

impl Budget {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.cap {
            Err(QgwError::StepCapExceeded(self.cap))
        } else {
            Ok(())
        }
    }
}

impl Presentation {
    fn run<T>(&self, f: impl FnOnce(&mut Budget) -> Result<T>) -> Result<T> {
        let mut b = Budget { steps: 0, cap: self.step_cap };
        let out = f(&mut b);
        stats::add_steps(b.steps);
        out
    }

    /// Normal form of a normal word `u` followed by letter `x`.
    fn append(&self, u: &[u8], x: u8, b: &mut Budget) -> Result<Element> {
        stacker::maybe_grow(64 * 1024, 4 * 1024 * 1024, || self.append_inner(u, x, b))
    }

    fn append_inner(&self, u: &[u8], x: u8, b: &mut Budget) -> Result<Element> {
        let Some(&a) = u.last() else {
            return Ok(Element::letter(x));
        };
        let Some(rhs) = self.rule(a, x) else {
            let mut w = u.to_vec();
            w.push(x);
            return Ok(Element::word(w, Scalar::one()));
        };
        let key = (u.to_vec(), x);
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit.clone());
        }
        b.tick()?;
        let prefix = &u[..u.len() - 1];
        let mut out = Element::zero();
        for (v, c) in rhs.terms() {
            let mut cur = Element::word(prefix.to_vec(), Scalar::one());
            for &y in v {
                cur = self.times_letter(&cur, y, b)?;
                if cur.is_zero() {
                    break;
                }
            }
            out.add_scaled(&cur, c);
        }
        self.cache.insert(key, out.clone());
        Ok(out)
    }

    fn times_letter(&self, e: &Element, x: u8, b: &mut Budget) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            let r = self.append(w, x, b)?;
            out.add_scaled(&r, c);
        }
        Ok(out)
    }

    fn times_word(&self, e: &Element, v: &[u8], b: &mut Budget) -> Result<Element> {
        let mut cur = e.clone();
        for &y in v {
            if cur.is_zero() {
                break;
            }
            cur = self.times_letter(&cur, y, b)?;
        }
        Ok(cur)
    }

    pub fn word_nf(&self, w: &[u8]) -> Result<Element> {
        self.run(|b| self.times_word(&Element::one(), w, b))
    }

    /// Rewrites every word of `e` to normal form.
    pub fn normal_form(&self, e: &Element) -> Result<Element> {
        self.run(|b| {
            let mut out = Element::zero();
            for (w, c) in e.terms() {
                let r = if self.is_normal_word(w) {
                    Element::word(w.clone(), Scalar::one())
                } else {
                    self.times_word(&Element::one(), w, b)?
                };
                out.add_scaled(&r, c);
            }
            Ok(out)
        })
    }

    /// Product of two normal-form elements.
    pub fn mul(&self, a: &Element, bb: &Element) -> Result<Element> {
        self.run(|b| {
            let mut out = Element::zero();
            for (v, c) in bb.terms() {
                let r = self.times_word(a, v, b)?;
                out.add_scaled(&r, c);
            }
            Ok(out)
        })
    }

    pub fn mul_all(&self, factors: &[&Element]) -> Result<Element> {
        let mut acc = Element::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &Element, n: u32) -> Result<Element> {
        let mut acc = Element::one();
        for _ in 0..n {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(self.mul(a, b)?.sub(&self.mul(b, a)?))
    }

    /// `ab + ba`.
    pub fn anticommutator(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(self.mul(a, b)?.add(&self.mul(b, a)?))
    }

    /// Inverse of `e = u (1 - x)` with `u` a unit word and `x` nilpotent,
    /// as `Σ x^k u^{-1}`. `None` if `e` has no such shape.
    pub fn unipotent_inverse(&self, e: &Element, max_terms: usize) -> Result<Option<Element>> {
        let Some((uw, uc)) = e
            .terms()
            .find(|(w, _)| w.iter().all(|&g| self.gens[g as usize].inverse.is_some()))
            .map(|(w, c)| (w.clone(), c.clone()))
        else {
            return Ok(None);
        };
        let Some(uinv_w) = self.word_inverse(&uw) else {
            return Ok(None);
        };
        let uinv = Element::word(uinv_w, uc.inv()?);
        let x = Element::one().sub(&self.mul(&uinv, e)?);
        let mut acc = Element::one();
        let mut pw = Element::one();
        for _ in 0..max_terms {
            pw = self.mul(&pw, &x)?;
            if pw.is_zero() {
                return Ok(Some(self.mul(&acc, &uinv)?));
            }
            acc = acc.add(&pw);
        }
        Ok(None)
    }
}
