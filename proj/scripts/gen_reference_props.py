"""Freeze RDKit descriptor values for a corpus sample (offline oracle).

usage: python scripts/gen_reference_props.py data/drug_2k.smi 400 > tests/data/reference_props.tsv
"""
import sys

from rdkit import Chem
from rdkit.Chem import Descriptors, rdMolDescriptors


def main():
    path, limit = sys.argv[1], int(sys.argv[2])
    print("smiles\tmolecular_weight\tring_count\taromatic_atom_count\theavy_atom_count")
    with open(path) as fh:
        for i, line in enumerate(fh):
            if i >= limit:
                break
            smi = line.split()[0]
            mol = Chem.MolFromSmiles(smi)
            if mol is None:
                continue
            arom = sum(1 for a in mol.GetAtoms() if a.GetIsAromatic())
            print(f"{smi}\t{Descriptors.MolWt(mol):.4f}\t"
                  f"{rdMolDescriptors.CalcNumRings(mol)}\t{arom}\t{mol.GetNumHeavyAtoms()}")


if __name__ == "__main__":
    main()
