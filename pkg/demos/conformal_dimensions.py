"""Abelian anyons of a few WZW algebras and the N=1 candidates they produce.

Run with ``python demos/conformal_dimensions.py``.
"""
from svoa_wzw.anyon_arith import all_currents, extension_admissible, generated_subgroup, sugawara_c
from svoa_wzw.classifier import enumerate_simple, theorem_table
from svoa_wzw.lie_core import WZWFactor


def show_anyons(f):
    print(f"{f.group_name}: c = {sugawara_c(f)}")
    for cur in all_currents([f])[1:]:
        a = cur.elements[0]
        ok = extension_admissible(generated_subgroup(cur))
        print(f"  {a.name:>4}  h = {str(cur.h):>5}  dim = {cur.dim:<6} extends: {ok}")


if __name__ == "__main__":
    for f in (WZWFactor("A", 11, 1), WZWFactor("D", 12, 2), WZWFactor("E7", 7, 2)):
        show_anyons(f)
    print("\nsimple candidates with h = 3/2:")
    for c in enumerate_simple():
        print(f"  {c.name}")
    print("\ndim V_{3/2} and c:")
    for r in theorem_table(max_m=6):
        print(f"  {r.name:<24} {str(r.dim32):<16} {r.c}")
