from dataclasses import dataclass

from pgaext.mul.core import RegisterRef, INPUT, OUTPUT, AUXILIARY
from pgaext.mul.gadgets import WordRef, CARRY, OperandError


@dataclass(frozen=True)
class RegisterLayout:
    """
    Register assignment for n-bit long multiplication: the operands
    I1 = in:1 and I2 = in:(n+1), the product O = out:1, the 2n-bit
    temporaries T1..T4 from aux:2 upwards and the carry c = aux:1.
    """
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise OperandError('Layouts exist for n >= 1, got %s' % self.n)

    def input(self, i):
        return RegisterRef(INPUT, (i - 1) * self.n + 1)

    def temp(self, i):
        return RegisterRef(AUXILIARY, 2 * self.n * (i - 1) + 2)

    def input_bit(self, i, j):
        return RegisterRef(INPUT, (i - 1) * self.n + j + 1)

    def temp_bit(self, i, j):
        return RegisterRef(AUXILIARY, 2 * (i - 1) * self.n + j + 2)

    def temp_word(self, i, width=None):
        return WordRef(self.temp(i), width or 2 * self.n)

    @property
    def I1(self):
        return self.input(1)

    @property
    def I2(self):
        return self.input(2)

    @property
    def O(self):
        return RegisterRef(OUTPUT, 1)

    @property
    def T1(self):
        return self.temp(1)

    @property
    def T2(self):
        return self.temp(2)

    @property
    def T3(self):
        return self.temp(3)

    @property
    def T4(self):
        return self.temp(4)

    @property
    def c(self):
        return CARRY


def layout(n):
    return RegisterLayout(n)
