#!/usr/bin/env python3
"""Generates the bundled benchmark netlists under data/benchmarks/.

Deterministic: every run reproduces the same files byte for byte.  All
covers use the canonical row patterns the BLIF reader recognizes.
"""

import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data" / "benchmarks"


class Builder:
    def __init__(self, name):
        self.name = name
        self.inputs = []
        self.outputs = []
        self.lines = []
        self.counter = 0

    def pi(self, name):
        self.inputs.append(name)
        return name

    def po(self, signal, name=None):
        self.outputs.append((name or signal, signal))

    def fresh(self):
        self.counter += 1
        return f"w{self.counter}"

    def gate(self, rows, *fanins):
        out = self.fresh()
        self.lines.append(".names " + " ".join(list(fanins) + [out]))
        self.lines.extend(rows)
        return out

    def and2(self, a, b):
        return self.gate(["11 1"], a, b)

    def or2(self, a, b):
        return self.gate(["1- 1", "-1 1"], a, b)

    def xor2(self, a, b):
        return self.gate(["10 1", "01 1"], a, b)

    def not1(self, a):
        return self.gate(["0 1"], a)

    def write(self):
        OUT.mkdir(parents=True, exist_ok=True)
        path = OUT / f"{self.name}.blif"
        with open(path, "w") as f:
            f.write(f".model {self.name}\n")
            f.write(".inputs " + " ".join(self.inputs) + "\n")
            f.write(".outputs " + " ".join(name for name, _ in self.outputs) + "\n")
            for name, signal in self.outputs:
                if name != signal:
                    # alias output names onto internal signals via a buffer
                    f.write(f".names {signal} {name}\n1 1\n")
            f.write("\n".join(self.lines) + "\n")
            f.write(".end\n")
        print(path)


def full_adder(b, a, x, c):
    axb = b.xor2(a, x)
    s = b.xor2(axb, c)
    carry = b.or2(b.and2(a, x), b.and2(axb, c))
    return s, carry


def ripple_adder(bits):
    b = Builder(f"adder{bits}")
    a = [b.pi(f"a{i}") for i in range(bits)]
    x = [b.pi(f"b{i}") for i in range(bits)]
    carry = None
    for i in range(bits):
        if carry is None:
            s = b.xor2(a[i], x[i])
            carry = b.and2(a[i], x[i])
        else:
            s, carry = full_adder(b, a[i], x[i], carry)
        b.po(s, f"s{i}")
    b.po(carry, "cout")
    b.write()


def multiplier(bits):
    b = Builder(f"mult{bits}")
    a = [b.pi(f"a{i}") for i in range(bits)]
    x = [b.pi(f"b{i}") for i in range(bits)]
    # partial products
    pp = [[b.and2(a[i], x[j]) for i in range(bits)] for j in range(bits)]
    acc = pp[0]
    for j in range(1, bits):
        row = pp[j]
        next_acc = []
        carry = None
        # acc[1:] + incoming row, ripple style
        b.po(acc[0], f"p{j - 1}")
        shifted = acc[1:] + [None]
        for i in range(bits):
            lhs = shifted[i]
            rhs = row[i]
            if lhs is None:
                if carry is None:
                    next_acc.append(rhs)
                else:
                    s = b.xor2(rhs, carry)
                    carry = b.and2(rhs, carry)
                    next_acc.append(s)
                continue
            if carry is None:
                s = b.xor2(lhs, rhs)
                carry = b.and2(lhs, rhs)
            else:
                s, carry = full_adder(b, lhs, rhs, carry)
            next_acc.append(s)
        next_acc.append(carry)
        acc = next_acc
    for i, s in enumerate(acc):
        b.po(s, f"p{bits - 1 + i}")
    b.write()


def parity(bits):
    b = Builder(f"parity{bits}")
    layer = [b.pi(f"x{i}") for i in range(bits)]
    while len(layer) > 1:
        nxt = []
        for i in range(0, len(layer) - 1, 2):
            nxt.append(b.xor2(layer[i], layer[i + 1]))
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    b.po(layer[0], "parity")
    b.write()


def priority(bits):
    b = Builder(f"priority{bits}")
    en = b.pi("en")
    reqs = [b.pi(f"r{i}") for i in range(bits)]
    seen = None
    for i, r in enumerate(reqs):
        if seen is None:
            grant = b.and2(r, en)
            seen = r
        else:
            grant = b.and2(b.and2(r, b.not1(seen)), en)
            seen = b.or2(seen, r)
        b.po(grant, f"g{i}")
    b.po(seen, "any")
    b.write()


def alu4():
    b = Builder("alu4")
    a = [b.pi(f"a{i}") for i in range(4)]
    x = [b.pi(f"b{i}") for i in range(4)]
    s0 = b.pi("s0")
    s1 = b.pi("s1")
    adds = []
    carry = None
    for i in range(4):
        if carry is None:
            adds.append(b.xor2(a[i], x[i]))
            carry = b.and2(a[i], x[i])
        else:
            s, carry = full_adder(b, a[i], x[i], carry)
            adds.append(s)
    n0 = b.not1(s0)
    n1 = b.not1(s1)
    for i in range(4):
        land = b.and2(a[i], x[i])
        lor = b.or2(a[i], x[i])
        lxor = b.xor2(a[i], x[i])
        pick = b.or2(
            b.or2(b.and2(adds[i], b.and2(n1, n0)), b.and2(land, b.and2(n1, s0))),
            b.or2(b.and2(lor, b.and2(s1, n0)), b.and2(lxor, b.and2(s1, s0))),
        )
        b.po(pick, f"y{i}")
    b.write()


def comparator(bits):
    b = Builder(f"comp{bits}")
    a = [b.pi(f"a{i}") for i in range(bits)]
    x = [b.pi(f"b{i}") for i in range(bits)]
    eq = None
    lt = None
    for i in reversed(range(bits)):
        bit_eq = b.not1(b.xor2(a[i], x[i]))
        bit_lt = b.and2(b.not1(a[i]), x[i])
        if eq is None:
            eq, lt = bit_eq, bit_lt
        else:
            lt = b.or2(lt, b.and2(eq, bit_lt))
            eq = b.and2(eq, bit_eq)
    b.po(eq, "eq")
    b.po(lt, "lt")
    b.write()


def mux(bits):
    sel_bits = bits.bit_length() - 1
    b = Builder(f"mux{bits}")
    data = [b.pi(f"d{i}") for i in range(bits)]
    sel = [b.pi(f"s{i}") for i in range(sel_bits)]
    layer = data
    for level in range(sel_bits):
        s = sel[level]
        ns = b.not1(s)
        nxt = []
        for i in range(0, len(layer), 2):
            nxt.append(b.or2(b.and2(layer[i], ns), b.and2(layer[i + 1], s)))
        layer = nxt
    b.po(layer[0], "y")
    b.write()


def random_dag(name, num_pis, num_gates, num_pos, seed):
    rng = random.Random(seed)
    b = Builder(name)
    pool = [b.pi(f"x{i}") for i in range(num_pis)]
    for _ in range(num_gates):
        op = rng.choice(["and", "or", "xor", "not"])
        lhs = pool[rng.randrange(len(pool))]
        if op == "not":
            out = b.not1(lhs)
        else:
            rhs = lhs
            while rhs == lhs:
                rhs = pool[rng.randrange(len(pool))]
            out = {"and": b.and2, "or": b.or2, "xor": b.xor2}[op](lhs, rhs)
        pool.append(out)
    for i in range(num_pos):
        b.po(pool[len(pool) - 1 - i], f"y{i}")
    b.write()


if __name__ == "__main__":
    ripple_adder(8)
    ripple_adder(32)
    multiplier(8)
    parity(16)
    priority(16)
    alu4()
    comparator(8)
    mux(8)
    random_dag("rand600", 24, 600, 12, seed=2024)
    random_dag("rand150", 10, 150, 6, seed=7)
