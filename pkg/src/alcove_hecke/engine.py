"""Convenience composition of the per-datum computation contexts."""

from __future__ import annotations

from dataclasses import dataclass, field

from .alcove import AlcoveModel
from .ext_weyl import ExtWeyl
from .groth_calc import GrothCalc
from .hecke import HeckeAlgebra
from .orders import PeriodicOrder
from .parabolic import FinitarySubset, make_parabolic
from .root_datum import RootDatum, load_root_datum
from .satake_char import SatakeChar


@dataclass
class Engine:
    datum: RootDatum
    ext: ExtWeyl
    alc: AlcoveModel
    order: PeriodicOrder
    hecke: HeckeAlgebra
    groth: GrothCalc
    satake: SatakeChar
    _parabolics: dict = field(default_factory=dict, repr=False)

    def parabolic(self, gen_names) -> FinitarySubset:
        """FinitarySubset from generator names like ["s1", "s0a"] (cached)."""
        if isinstance(gen_names, str):
            gen_names = [tok for tok in gen_names.replace(",", " ").split() if tok]
        key = tuple(sorted(gen_names))
        if key not in self._parabolics:
            gens = [self.ext.gen_by_name(n) for n in gen_names]
            self._parabolics[key] = make_parabolic(self.ext, gens)
        return self._parabolics[key]


def build_engine(spec) -> Engine:
    datum = spec if isinstance(spec, RootDatum) else load_root_datum(spec)
    ext = ExtWeyl(datum)
    alc = AlcoveModel(ext)
    order = PeriodicOrder(alc)
    groth = GrothCalc(alc, order)
    return Engine(
        datum=datum,
        ext=ext,
        alc=alc,
        order=order,
        hecke=HeckeAlgebra(alc),
        groth=groth,
        satake=groth.satake,
    )
