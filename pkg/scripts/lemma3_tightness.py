#!/usr/bin/env python3
"""Growth of K_l counts on the k-blocks-plus-hubs family against d^(l-2) m.

For fixed l the ratio count / (d^(l-2) m) should level off as b grows; this is
the measurable counterpart of the Omega(alpha^(l-2) m) lower bound.
"""
import argparse

from sparsecliques import count_k_cliques, degeneracy, gen_lemma3


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--b", type=int, nargs="+", default=[8, 16, 32])
    ap.add_argument("--l", type=int, nargs="+", default=[3, 4, 5])
    args = ap.parse_args()
    print("b,l,n,m,d,count,closed_form,ratio")
    for b in args.b:
        g, cert = gen_lemma3(args.k, b)
        d = degeneracy(g).d
        for l in args.l:
            c = count_k_cliques(g, l)
            print(f"{b},{l},{g.n},{g.m},{d},{c},{cert.expected_counts[l]},{c / (d ** (l - 2) * g.m):.5f}")


if __name__ == "__main__":
    main()
