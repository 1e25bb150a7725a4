//! Named groups acting on named codes.

use super::classical::{classical_code, cyclic_generator, GOLAY23_POLY};
use super::wreath::{wreath_group, WreathElement};
use crate::algebra::{FiniteField, Perm, PermGroup};
use crate::{Error, Result};

fn is_square_mod(x: u64, p: u64) -> bool {
    x % p != 0 && (1..p).any(|y| y * y % p == x % p)
}

fn inv_mod(x: u64, p: u64) -> u64 {
    (1..p).find(|y| x * y % p == 1).expect("unit")
}

/// `M_23 = ⟨i ↦ i+1, i ↦ 2i, δ⟩` on `Z_23`, where `δ` fixes 0 and sends
/// `x ↦ 9x³` on squares and `x ↦ x³/9` on non-squares.
pub fn mathieu23() -> PermGroup {
    PermGroup::new(23, mathieu23_gens(23)).expect("valid generators")
}

fn mathieu23_gens(degree: usize) -> Vec<Perm> {
    let p = 23u64;
    let fix = |f: &dyn Fn(u64) -> u64| Perm::from_fn(degree, |x| if x < 23 { f(x as u64) as usize } else { x });
    let nine_inv = inv_mod(9, p);
    vec![
        fix(&|x| (x + 1) % p),
        fix(&|x| 2 * x % p),
        fix(&|x| {
            let c = x * x % p * x % p;
            if x == 0 {
                0
            } else if is_square_mod(x, p) {
                9 * c % p
            } else {
                c * nine_inv % p
            }
        }),
    ]
}

/// `M_24` on `Z_23 ∪ {∞}` (∞ = 23): `M_23` plus `x ↦ −1/x`.
pub fn mathieu24() -> PermGroup {
    let mut gens = mathieu23_gens(24);
    let p = 23u64;
    gens.push(Perm::from_fn(24, |x| match x {
        23 => 0,
        0 => 23,
        _ => ((p - inv_mod(x as u64, p)) % p) as usize,
    }));
    PermGroup::new(24, gens).expect("valid generators")
}

fn translations_plus_top(field: &FiniteField, rows: &[Vec<u32>], top: &PermGroup) -> Result<PermGroup> {
    let n = top.degree();
    let q = field.order() as usize;
    let mut gens: Vec<WreathElement> = rows.iter().map(|r| WreathElement::translation(field, r)).collect();
    gens.extend(top.gens().iter().map(|s| WreathElement::from_top(q, s.clone())));
    wreath_group(n, q, &gens)
}

/// `T_C ⋊ M_23` on the binary Golay code, as wreath permutations.
pub fn golay23_aut() -> Result<PermGroup> {
    let f = FiniteField::of_order(2)?;
    translations_plus_top(&f, &cyclic_generator(23, &GOLAY23_POLY), &mathieu23())
}

/// `T_C ⋊ M_24` on the extended binary Golay code.
pub fn golay24_aut() -> Result<PermGroup> {
    let c = classical_code("golay24")?;
    let lin = c.linear_descriptor().unwrap();
    translations_plus_top(&lin.field, &lin.generator, &mathieu24())
}

/// `T_C ⋊ S_n` for `Rep_n(2)`.
pub fn rep_full(n: usize) -> Result<PermGroup> {
    let f = FiniteField::of_order(2)?;
    translations_plus_top(&f, &[vec![1; n]], &PermGroup::symmetric(n))
}

/// `S_n` in the top group only, for `Rep_n(2)`.
pub fn rep_top_only(n: usize) -> Result<PermGroup> {
    let gens: Vec<WreathElement> = PermGroup::symmetric(n).gens().iter().map(|s| WreathElement::from_top(2, s.clone())).collect();
    wreath_group(n, 2, &gens)
}

/// Names accepted by `builtin_group`, with their host codes.
pub const BUILTIN_GROUPS: [(&str, &str); 4] = [
    ("golay23_aut", "catalog:golay23"),
    ("golay24_aut", "catalog:golay24"),
    ("rep_full", "Rep_n(2), any n"),
    ("rep_top", "Rep_n(2), any n"),
];

/// Resolves a named group; `n` is the length for families.
pub fn builtin_group(name: &str, n: Option<usize>) -> Result<PermGroup> {
    let need_n = || n.ok_or_else(|| Error::InvalidParameter(format!("group {name} needs a length")));
    match name {
        "golay23_aut" => golay23_aut(),
        "golay24_aut" => golay24_aut(),
        "rep_full" => rep_full(need_n()?),
        "rep_top" => rep_top_only(need_n()?),
        _ => Err(Error::InvalidParameter(format!("unknown builtin group {name:?}"))),
    }
}
