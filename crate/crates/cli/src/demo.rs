//! Built-in example families for the demo subcommands.
//!
//! Both families come with hand-derived membership witnesses, so the demos
//! stay fast even when the bounded search is given a small budget: the
//! search result is preferred when it lands, and the constructed witness is
//! the fallback. Every witness is checked before use.

use cockcroft_core::{
    left_power_witness, right_power_witness, Alphabet, Presentation, Witness, Word,
};
use num_bigint::BigInt;

fn gen_pow(ab: &Alphabet, gen: usize, e: i64) -> Word {
    Word::generator_pow(ab, gen, BigInt::from(e)).expect("generator in range")
}

fn product(words: &[&Word]) -> Word {
    let mut acc = Word::identity(words[0].alphabet());
    for w in words {
        acc = acc.multiply(w).expect("shared alphabet");
    }
    acc
}

/// Three generators; r = {[x^a, y]}, s = {[y^b, z], [z^c, x]} with abc != 0.
#[derive(Clone, Copy, Debug)]
pub struct TripleCommutator {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl TripleCommutator {
    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(vec!["x", "y", "z"]).expect("fixed names")
    }

    pub fn presentation(&self) -> Presentation {
        assert!(self.a != 0 && self.b != 0 && self.c != 0, "parameters must be nonzero");
        let ab = self.alphabet();
        let (x, y, z) = (gen_pow(&ab, 0, 1), gen_pow(&ab, 1, 1), gen_pow(&ab, 2, 1));
        let r0 = gen_pow(&ab, 0, self.a).commutator(&y).unwrap();
        let s0 = gen_pow(&ab, 1, self.b).commutator(&z).unwrap();
        let s1 = gen_pow(&ab, 2, self.c).commutator(&x).unwrap();
        Presentation::with_partition(ab, vec![r0], vec![s0, s1]).expect("relators are nontrivial")
    }

    /// x^a z^c x^-a y^b x^a y^-b z^-c y^b x^-a y^-b: a commutator identity
    /// placing the word in both normal closures.
    pub fn mu(&self) -> Word {
        let ab = self.alphabet();
        let a = gen_pow(&ab, 0, self.a);
        let b = gen_pow(&ab, 1, self.b);
        let z = gen_pow(&ab, 2, self.c);
        product(&[
            &a,
            &z,
            &a.invert(),
            &b,
            &a,
            &b.invert(),
            &z.invert(),
            &b,
            &a.invert(),
            &b.invert(),
        ])
    }

    /// mu as a product over r = {[x^a, y]}:
    /// mu = g [B,A] g^-1 · [A,B] with A = x^a, B = y^b, g = A z^c A^-1.
    pub fn witness_r(&self) -> Witness {
        let ab = self.alphabet();
        let y = gen_pow(&ab, 1, 1);
        // [A, B] = [x^a, y^b] over relator 0 = [x^a, y].
        let a_b = right_power_witness(0, &y, self.b).expect("alphabet fixed");
        let a = gen_pow(&ab, 0, self.a);
        let g = product(&[&a, &gen_pow(&ab, 2, self.c), &a.invert()]);
        a_b.inverse().conjugated_by(&g).unwrap().product(a_b)
    }

    /// mu as a product over s = {[y^b, z], [z^c, x]}:
    /// mu = [A,Z] [Z,B] (B [Z,A] B^-1) (BAB^-1 [B,Z] BA^-1B^-1).
    pub fn witness_s(&self) -> Witness {
        let ab = self.alphabet();
        let x = gen_pow(&ab, 0, 1);
        let z = gen_pow(&ab, 2, 1);
        // [Z, A] = [z^c, x^a] over relator 1 = [z^c, x].
        let z_a = right_power_witness(1, &x, self.a).expect("alphabet fixed");
        // [B, Z] = [y^b, z^c] over relator 0 = [y^b, z].
        let b_z = right_power_witness(0, &z, self.c).expect("alphabet fixed");
        let b = gen_pow(&ab, 1, self.b);
        let bab = product(&[&b, &gen_pow(&ab, 0, self.a), &b.invert()]);
        z_a.inverse()
            .product(b_z.inverse())
            .product(z_a.conjugated_by(&b).unwrap())
            .product(b_z.conjugated_by(&bab).unwrap())
    }

    /// Product of the e3 scalars: the image of mu is (abc) times the class
    /// of [[x,y],z].
    pub fn scalar(&self) -> BigInt {
        BigInt::from(self.a) * BigInt::from(self.b) * BigInt::from(self.c)
    }
}

/// Two generators; r = {[x, k]}, s = {[y, k]} for k = [x, y^c], c != 0.
#[derive(Clone, Copy, Debug)]
pub struct NestedCommutator {
    pub c: i64,
}

impl NestedCommutator {
    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(vec!["x", "y"]).expect("fixed names")
    }

    fn k(&self) -> Word {
        let ab = self.alphabet();
        gen_pow(&ab, 0, 1).commutator(&gen_pow(&ab, 1, self.c)).unwrap()
    }

    pub fn presentation(&self) -> Presentation {
        assert!(self.c != 0, "parameter must be nonzero");
        let ab = self.alphabet();
        let k = self.k();
        let r0 = gen_pow(&ab, 0, 1).commutator(&k).unwrap();
        let s0 = gen_pow(&ab, 1, 1).commutator(&k).unwrap();
        Presentation::with_partition(ab, vec![r0], vec![s0]).expect("relators are nontrivial")
    }

    /// k x y^c x^-1 k^-1 x k y^-c k^-1 x^-1 for k = [x, y^c].
    pub fn mu(&self) -> Word {
        let ab = self.alphabet();
        let k = self.k();
        let x = gen_pow(&ab, 0, 1);
        let yc = gen_pow(&ab, 1, self.c);
        product(&[
            &k,
            &x,
            &yc,
            &x.invert(),
            &k.invert(),
            &x,
            &k,
            &yc.invert(),
            &k.invert(),
            &x.invert(),
        ])
    }

    /// mu = g r0 g^-1 · r0^-1 with g = k x y^c k^-1 x^-1.
    pub fn witness_r(&self) -> Witness {
        let ab = self.alphabet();
        let k = self.k();
        let x = gen_pow(&ab, 0, 1);
        let g = product(&[&k, &x, &gen_pow(&ab, 1, self.c), &k.invert(), &x.invert()]);
        Witness::single(g, 0, 1).product(Witness::single(Word::identity(&ab), 0, -1))
    }

    /// mu = (k [Y,k]^-1 k^-1) (x [Y,k] x^-1) with Y = y^c, over s0 = [y, k].
    pub fn witness_s(&self) -> Witness {
        let ab = self.alphabet();
        let y = gen_pow(&ab, 1, 1);
        // [Y, k] = [y^c, k] over relator 0 = [y, k].
        let y_k = left_power_witness(0, &y, self.c).expect("alphabet fixed");
        let k = self.k();
        y_k.inverse()
            .conjugated_by(&k)
            .unwrap()
            .product(y_k.conjugated_by(&gen_pow(&ab, 0, 1)).unwrap())
    }

    /// The image of mu is c^2 times the class of [y, [x, [x, y]]].
    pub fn scalar(&self) -> BigInt {
        BigInt::from(self.c) * BigInt::from(self.c)
    }
}
