"""Braid-group representations and brute-force gate compilation.

Exchanging anyons realizes unitaries: a phase for abelian anyons, a
2x2 matrix on the Fibonacci qubit.  The Fibonacci braid generators are
dense in SU(2), so searching over braid words compiles arbitrary
single-qubit gates to any accuracy.
"""

import numpy as np

from anyons import (
    BraidWord,
    abelian_rep,
    compile_gate,
    evaluate,
    fib_qubit_rep,
    format_braid,
    parse_braid,
    relation_residual,
    tl_b3_rep,
)

word = parse_braid("B3: s1 s2^-1 s1")
print(f"parsed {format_braid(word)!r}: {word.strands} strands, letters {word.letters}")

print("\nBraid-relation residuals (far commutation + Yang-Baxter):")
print(f"  abelian phase pi:   {relation_residual(abelian_rep(np.pi), 6):.3e}")
t = np.exp(-1j * np.pi / 2)
print(f"  Temperley-Lieb B3:  {relation_residual(tl_b3_rep(t), 3):.3e}")
rep = fib_qubit_rep()
print(f"  Fibonacci qubit:    {relation_residual(rep, 3):.3e}")

print("\nFibonacci b1 = diag(exp(4 pi i/5), -exp(2 pi i/5)); b1^10 = identity:")
tenth = evaluate(rep, BraidWord(3, (1,) * 10))
print(f"  max deviation from identity: {np.abs(tenth - np.eye(2)).max():.3e}")

print("\nCompiling the NOT gate from braids (projective distance):")
target = np.array([[0, 1], [1, 0]], dtype=complex)
for max_len in (2, 4, 6, 8, 10):
    word, dist = compile_gate(target, max_len)
    print(f"  max_len {max_len:2d}: distance {dist:.6f}  word {format_braid(word)}")

print("\nA word already in the generated set compiles exactly:")
target = evaluate(rep, parse_braid("B3: s1 s2"))
word, dist = compile_gate(target, 4)
print(f"  found {format_braid(word)} at distance {dist:.2e}")
