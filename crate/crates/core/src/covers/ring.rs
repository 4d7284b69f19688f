//! Section rings of genus-2 canonical covers with an even theta
//! characteristic, by confluent monomial rewriting.
//!
//! The ring is presented by generators `X, Y` (degree 2), `W1, W2`
//! (degree 3) and optionally the cover generator `U` (degree 1), subject
//! to `W1^2 = B1(X, Y)`, `W2^2 = B2(X, Y)` and `U^2 = L(X, Y)`, where
//! `B1 B2` is a squarefree binary sextic (the hyperelliptic branch locus)
//! and `L` a nonzero linear form (the branch divisor of the cover).
//! Monomials `X^a Y^b W1^c1 W2^c2 U^c3` with the flags in `{0, 1}` form a
//! free-module basis; the three rewrite rules act on separate generators
//! and commute, so reduction is confluent.

use std::collections::BTreeMap;

use crate::arith::form::BinaryForm;
use crate::arith::matrix::ScalarMat;
use crate::arith::scalar::{Field, Scalar};
use crate::error::{Error, Result};
use crate::hitchin::sample::SplitMix64;

/// A normal-form monomial: `X^a Y^b W1^c1 W2^c2 U^c3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        2 * self.a + 2 * self.b + 3 * (self.c1 as u32) + 3 * (self.c2 as u32) + self.c3 as u32
    }
}

/// An element of the ring: a finite sum of normal-form monomials.
pub type RingElement = BTreeMap<Monomial, Scalar>;

/// The graded section ring of a genus-2 canonical-cover fixture.
#[derive(Clone, Debug, PartialEq)]
pub struct Genus2ThetaRing {
    b1: BinaryForm,
    b2: BinaryForm,
    l: BinaryForm,
    includes_cover: bool,
    field: Field,
}

impl Genus2ThetaRing {
    /// Validate and build: `B1, B2` are cubics whose product is squarefree
    /// as a twist-6 section (six distinct branch points, infinity
    /// included), `L` a nonzero linear form.
    pub fn new(
        b1: BinaryForm,
        b2: BinaryForm,
        l: BinaryForm,
        includes_cover: bool,
    ) -> Result<Genus2ThetaRing> {
        let field = b1.field();
        if b2.field() != field || l.field() != field {
            return Err(Error::FieldMismatch(
                field.to_string(),
                "mixed fixture fields".into(),
            ));
        }
        for (name, form, twist) in [("B1", &b1, 3), ("B2", &b2, 3), ("L", &l, 1)] {
            if form.twist() != twist {
                return Err(Error::TwistMismatch {
                    context: "genus-2 fixture generator",
                    expected: twist,
                    found: form.twist(),
                });
            }
            if form.is_zero() {
                return Err(Error::invalid(name, "generator must be nonzero"));
            }
        }
        let product = b1.mul(&b2);
        let (_, repeated) = product.squarefree_part()?;
        if repeated {
            return Err(Error::invalid(
                "B1*B2",
                "branch sextic must be squarefree (six distinct branch points)",
            ));
        }
        Ok(Genus2ThetaRing {
            b1,
            b2,
            l,
            includes_cover,
            field,
        })
    }

    /// A random valid fixture over `F_p`: cubics resampled until the
    /// branch sextic is squarefree, plus a random nonzero linear form.
    pub fn random(p: u64, seed: u64, includes_cover: bool) -> Result<Genus2ThetaRing> {
        let field = Field::prime(p)?;
        let mut rng = SplitMix64::new(seed);
        let mut form = |twist: i64| -> BinaryForm {
            let coeffs: Vec<Scalar> = (0..=twist)
                .map(|_| field.from_int(rng.next_below(p) as i64))
                .collect();
            BinaryForm::new(field, twist, coeffs).unwrap()
        };
        loop {
            let b1 = form(3);
            let b2 = form(3);
            let l = form(1);
            if l.is_zero() || b1.is_zero() || b2.is_zero() {
                continue;
            }
            match Genus2ThetaRing::new(b1, b2, l, includes_cover) {
                Ok(ring) => return Ok(ring),
                Err(Error::Invalid { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn includes_cover(&self) -> bool {
        self.includes_cover
    }

    pub fn b1(&self) -> &BinaryForm {
        &self.b1
    }

    pub fn b2(&self) -> &BinaryForm {
        &self.b2
    }

    pub fn linear_form(&self) -> &BinaryForm {
        &self.l
    }

    /// Normal-form monomials of one graded piece, in a fixed order.
    pub fn basis(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let flags: &[(bool, bool, bool)] = if self.includes_cover {
            &[
                (false, false, false),
                (false, false, true),
                (true, false, false),
                (true, false, true),
                (false, true, false),
                (false, true, true),
                (true, true, false),
                (true, true, true),
            ]
        } else {
            &[
                (false, false, false),
                (true, false, false),
                (false, true, false),
                (true, true, false),
            ]
        };
        for &(c1, c2, c3) in flags {
            let fixed = 3 * (c1 as u32) + 3 * (c2 as u32) + c3 as u32;
            if fixed > degree || (degree - fixed) % 2 != 0 {
                continue;
            }
            let rest = (degree - fixed) / 2;
            for a in 0..=rest {
                out.push(Monomial {
                    a,
                    b: rest - a,
                    c1,
                    c2,
                    c3,
                });
            }
        }
        out.sort();
        out
    }

    /// Dimension of a graded piece: the number of normal-form monomials.
    pub fn hilbert_dim(&self, degree: u32) -> u64 {
        self.basis(degree).len() as u64
    }

    /// Expand a binary form of twist `t` into `X, Y` monomials (the
    /// coefficient of `x^a` homogenizes to `X^a Y^(t-a)`).
    fn expand_form(&self, f: &BinaryForm) -> Vec<(u32, u32, Scalar)> {
        let t = f.twist() as u32;
        f.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(a, c)| (a as u32, t - a as u32, c.clone()))
            .collect()
    }

    fn rule_form(&self, which: Rule) -> &BinaryForm {
        match which {
            Rule::W1 => &self.b1,
            Rule::W2 => &self.b2,
            Rule::U => &self.l,
        }
    }

    /// Reduce a raw monomial (arbitrary exponents on `W1, W2, U`) to an
    /// element in normal form, applying the rewrite rules in the given
    /// order. The result is independent of the order (the rules touch
    /// disjoint generators); the randomized-order confluence test
    /// exercises exactly this entry point.
    pub fn reduce_with_order(
        &self,
        a: u32,
        b: u32,
        e1: u32,
        e2: u32,
        e3: u32,
        coeff: &Scalar,
        order: &[Rule],
    ) -> RingElement {
        let mut acc: Vec<(u32, u32, u32, u32, u32, Scalar)> =
            vec![(a, b, e1, e2, e3, coeff.clone())];
        loop {
            // find a term with a reducible exponent, honoring `order`
            let mut reduced_any = false;
            let mut next = Vec::new();
            for (a, b, e1, e2, e3, c) in acc.drain(..) {
                let rule = order.iter().copied().find(|r| match r {
                    Rule::W1 => e1 >= 2,
                    Rule::W2 => e2 >= 2,
                    Rule::U => e3 >= 2,
                });
                match rule {
                    None => next.push((a, b, e1, e2, e3, c)),
                    Some(rule) => {
                        reduced_any = true;
                        let form = self.rule_form(rule).clone();
                        for (da, db, fc) in self.expand_form(&form) {
                            let nc = c.try_mul(&fc).expect("same field");
                            let (mut n1, mut n2, mut n3) = (e1, e2, e3);
                            match rule {
                                Rule::W1 => n1 -= 2,
                                Rule::W2 => n2 -= 2,
                                Rule::U => n3 -= 2,
                            }
                            next.push((a + da, b + db, n1, n2, n3, nc));
                        }
                    }
                }
            }
            acc = next;
            if !reduced_any {
                break;
            }
        }
        let mut out = RingElement::new();
        for (a, b, e1, e2, e3, c) in acc {
            debug_assert!(e1 <= 1 && e2 <= 1 && e3 <= 1);
            let mono = Monomial {
                a,
                b,
                c1: e1 == 1,
                c2: e2 == 1,
                c3: e3 == 1,
            };
            merge_term(&mut out, mono, c);
        }
        out
    }

    /// Product of two normal-form monomials, reduced.
    pub fn multiply(&self, x: &Monomial, y: &Monomial) -> RingElement {
        self.reduce_with_order(
            x.a + y.a,
            x.b + y.b,
            x.c1 as u32 + y.c1 as u32,
            x.c2 as u32 + y.c2 as u32,
            x.c3 as u32 + y.c3 as u32,
            &self.field.one(),
            &[Rule::W1, Rule::W2, Rule::U],
        )
    }

    /// Product of a list of normal-form monomials.
    pub fn product(&self, monomials: &[Monomial]) -> RingElement {
        let mut acc: RingElement = RingElement::new();
        acc.insert(
            Monomial {
                a: 0,
                b: 0,
                c1: false,
                c2: false,
                c3: false,
            },
            self.field.one(),
        );
        for m in monomials {
            let mut next = RingElement::new();
            for (mono, coeff) in &acc {
                let partial = self.reduce_with_order(
                    mono.a + m.a,
                    mono.b + m.b,
                    mono.c1 as u32 + m.c1 as u32,
                    mono.c2 as u32 + m.c2 as u32,
                    mono.c3 as u32 + m.c3 as u32,
                    coeff,
                    &[Rule::W1, Rule::W2, Rule::U],
                );
                for (pm, pc) in partial {
                    merge_term(&mut next, pm, pc);
                }
            }
            acc = next;
        }
        acc
    }

    /// Does multiplication from products of degree-`d_gen` elements
    /// surject onto the degree-`d_target` graded piece? Only products of
    /// factors all of degree `d_gen` are considered, so a target degree
    /// that is not a multiple of `d_gen` is never reached.
    ///
    /// Requires the cover generator (the interesting generation questions
    /// concern the cover's coordinate ring).
    pub fn generation_in_degree(&self, d_gen: u32, d_target: u32) -> Result<bool> {
        if !self.includes_cover {
            return Err(Error::invalid(
                "generation_in_degree",
                "ring must include the cover generator U",
            ));
        }
        if d_gen == 0 || d_target == 0 {
            return Err(Error::invalid(
                "generation_in_degree",
                "degrees must be positive",
            ));
        }
        let target_basis = self.basis(d_target);
        let target_dim = target_basis.len();
        if d_target % d_gen != 0 {
            return Ok(target_dim == 0);
        }
        let t = (d_target / d_gen) as usize;
        let gens = self.basis(d_gen);
        let index: BTreeMap<Monomial, usize> = target_basis
            .iter()
            .enumerate()
            .map(|(i, m)| (*m, i))
            .collect();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        // Multisets of generators as weakly increasing index vectors.
        let mut choice = vec![0usize; t];
        loop {
            let monomials: Vec<Monomial> = choice.iter().map(|&i| gens[i]).collect();
            let prod = self.product(&monomials);
            let mut row = vec![self.field.zero(); target_dim];
            for (mono, coeff) in prod {
                let idx = *index
                    .get(&mono)
                    .expect("product lands in the target degree");
                row[idx] = row[idx].try_add(&coeff)?;
            }
            rows.push(row);
            let mut advanced = false;
            for pos in (0..t).rev() {
                if choice[pos] + 1 < gens.len() {
                    let v = choice[pos] + 1;
                    for c in choice.iter_mut().skip(pos) {
                        *c = v;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
        let rank = ScalarMat::from_rows(rows).rank();
        Ok(rank == target_dim)
    }
}

fn merge_term(out: &mut RingElement, mono: Monomial, coeff: Scalar) {
    use std::collections::btree_map::Entry;
    match out.entry(mono) {
        Entry::Vacant(v) => {
            if !coeff.is_zero() {
                v.insert(coeff);
            }
        }
        Entry::Occupied(mut o) => {
            let sum = o.get().try_add(&coeff).expect("same field");
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// The three rewrite rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    W1,
    W2,
    U,
}
