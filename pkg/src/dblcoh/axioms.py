"""Axiom templates: two face sequences between a pair of paths of structural moves.

Each entry gives the source word, the two paths ``P`` and ``Q`` as ``(move, position)``
steps, and two fillings ``left``/``right`` as ``(face, inverse, index)`` steps that
rewrite ``P`` into ``Q`` (replayed by :func:`dblcoh.words.replay`).  The fillings were
found with the search helpers in :mod:`dblcoh.words` and are checked again at import
time by the test suite.
"""

from __future__ import annotations

AXIOMS: dict[str, dict] = {
    "associahedron": {
        "group": "monoidal",
        "about": "((((AB)C)D)E) to (A(B(C(DE)))): pentagonators and naturality squares",
        "source": (((('A', 'B'), 'C'), 'D'), 'E'),
        "P": [('a', (0, 0)), ('a', (0,)), ('a', (0, 1)), ('a', ()), ('a', (1,)), ('a', (1, 1))],
        "Q": [('a', ()), ('a', ()), ('a', ())],
        "left": [
            ('pi@0:((((AB)C)D)E)', False, 0),
            ('pi@.:(((AB)(CD))E)', False, 1),
            ('nat@.:((AB)((CD)E))/a@1', True, 2),
            ('pi@.:((((AB)C)D)E)', False, 0),
        ],
        "right": [
            ('nat@.:((A((BC)D))E)/a@01', False, 2),
            ('pi@1:(A(((BC)D)E))', False, 3),
            ('pi@.:(((A(BC))D)E)', False, 1),
            ('nat@.:((((AB)C)D)E)/a@00', False, 0),
            ('pi@.:(((AB)C)(DE))', False, 1),
        ],
    },
    "unit_left": {
        "group": "monoidal",
        "about": "((AI)B)C to A(BC): pentagonator against the middle unit cells",
        "source": ((('A', 'I'), 'B'), 'C'),
        "P": [('a', (0,)), ('a', ()), ('a', (1,)), ('l', (1,))],
        "Q": [('r', (0, 0)), ('a', ())],
        "left": [
            ('lam@1:(A((IB)C))', False, 2),
            ('nat@.:((A(IB))C)/l@01', True, 1),
            ('mu@0:(((AI)B)C)', False, 0),
        ],
        "right": [
            ('pi@.:(((AI)B)C)', False, 0),
            ('mu@.:((AI)(BC))', False, 1),
            ('nat@.:(((AI)B)C)/r@00', True, 0),
        ],
    },
    "unit_right": {
        "group": "monoidal",
        "about": "((AB)I)C to A(BC): pentagonator against the right unit cells",
        "source": ((('A', 'B'), 'I'), 'C'),
        "P": [('a', (0,)), ('a', ()), ('a', (1,)), ('l', (1, 1))],
        "Q": [('r', (0,)), ('a', ())],
        "left": [
            ('pi@.:(((AB)I)C)', False, 0),
            ('nat@.:((AB)(IC))/l@1', True, 1),
            ('mu@.:(((AB)I)C)', False, 0),
        ],
        "right": [
            ('mu@1:(A((BI)C))', False, 2),
            ('nat@.:((A(BI))C)/r@01', True, 1),
            ('rho@0:(((AB)I)C)', False, 0),
        ],
    },
    "braid_1_3": {
        "group": "braided",
        "about": "A passes B, C, D one at a time or all at once (zeta side)",
        "source": ((('A', 'B'), 'C'), 'D'),
        "P": [('s', (0, 0)), ('a', (0,)), ('s', (0, 1)), ('a', ()), ('a', (1,)), ('s', (1, 1))],
        "Q": [('a', ()), ('a', ()), ('s', ()), ('a', ()), ('a', (1,))],
        "left": [
            ('nat@.:((B(AC))D)/s@01', False, 2),
            ('zeta@1:(B((AC)D))', False, 3),
            ('pi@.:(((BA)C)D)', False, 1),
            ('nat@.:(((AB)C)D)/s@00', False, 0),
            ('zeta@.:((AB)(CD))', False, 1),
        ],
        "right": [
            ('zeta@0:(((AB)C)D)', False, 0),
            ('pi@.:(((BC)A)D)', False, 2),
            ('nat@.:((BC)(AD))/s@1', True, 3),
            ('zeta@.:((A(BC))D)', False, 1),
            ('pi@.:(((BC)D)A)', True, 3),
            ('nat@.:(A((BC)D))/a@1', True, 2),
            ('pi@.:(((AB)C)D)', False, 0),
        ],
    },
    "braid_3_1": {
        "group": "braided",
        "about": "D passes A, B, C one at a time or all at once (xi side)",
        "source": ('A', ('B', ('C', 'D'))),
        "P": [('s', (1, 1)), ('ai', (1,)), ('s', (1, 0)), ('ai', ()), ('ai', (0,)), ('s', (0, 0))],
        "Q": [('ai', ()), ('ai', ()), ('s', ()), ('ai', ()), ('ai', (0,))],
        "left": [
            ('nat@.:(A((BD)C))/s@10', False, 2),
            ('xi@0:((A(BD))C)', False, 3),
            ('pii@.:(A(B(DC)))', False, 1),
            ('nat@.:(A(B(CD)))/s@11', False, 0),
            ('xi@.:((AB)(CD))', False, 1),
        ],
        "right": [
            ('xi@1:(A(B(CD)))', False, 0),
            ('pii@.:(A(D(BC)))', False, 2),
            ('nat@.:((AD)(BC))/s@0', True, 3),
            ('xi@.:(A((BC)D))', False, 1),
            ('pii@.:(D(A(BC)))', True, 3),
            ('nat@.:((A(BC))D)/ai@0', True, 2),
            ('pii@.:(A(B(CD)))', False, 0),
        ],
    },
    "braid_2_2": {
        "group": "braided",
        "about": "AB passes CD: split the mover first or the obstacle first",
        "source": ((('A', 'B'), 'C'), 'D'),
        "P": [('a', ()), ('s', ()), ('a', ())],
        "Q": [('a', (0,)), ('s', (0, 1)), ('ai', (0,)), ('s', (0, 0)), ('a', (0,)), ('a', ()), ('a', (1,)), ('s', (1, 1)), ('ai', (1,)), ('s', (1, 0)), ('a', (1,))],
        "left": [
            ('zeta@.:(((AB)C)D)', True, 0),
            ('cancel-a@0:(((AB)C)D)', True, 0),
            ('cancel-ai@0:((C(AB))D)', True, 3),
            ('xi@0:((A(BC))D)', True, 1),
            ('cancel-a@1:(C((AB)D))', True, 6),
            ('cancel-ai@1:(C(D(AB)))', True, 9),
            ('xi@1:(C(A(BD)))', True, 7),
        ],
        "right": [
            ('cancel-a@.:((AB)(CD))', True, 1),
            ('cancel-ai@.:((CD)(AB))', True, 4),
            ('xi@.:(A(B(CD)))', True, 2),
            ('cancel-ai@1:(A(B(CD)))', True, 2),
            ('cancel-a@1:(A((CD)B))', True, 5),
            ('zeta@1:(A((BC)D))', True, 3),
            ('cancel-ai@0:((A(CD))B)', True, 8),
            ('cancel-a@0:(((CD)A)B)', True, 11),
            ('zeta@0:(((AC)D)B)', True, 9),
            ('pi@.:(((AB)C)D)', True, 0),
            ('cancel-a@1:(A((BC)D))', False, 2),
            ('nat@.:((A(BC))D)/s@01', True, 1),
            ('pii@.:(A(C(DB)))', False, 5),
            ('nat@.:(A(C(BD)))/s@11', False, 4),
            ('nat@.:((AC)(DB))/s@0', True, 6),
            ('int@.:((AC)(BD))/s@1|s@0', False, 5),
            ('pi@.:(((CD)A)B)', True, 11),
            ('cancel-ai@0:((C(DA))B)', False, 10),
            ('nat@.:((C(AD))B)/s@01', False, 9),
            ('cancel-a@1:(C((AD)B))', True, 10),
            ('pi@.:(((CA)D)B)', False, 8),
            ('cancel-ai@.:((CA)(DB))', False, 7),
            ('cancel-ai@0:((A(CB))D)', True, 2),
            ('pi@.:(((AC)B)D)', False, 3),
            ('cancel-a@.:((AC)(BD))', False, 4),
            ('nat@.:((CA)(BD))/s@1', False, 5),
            ('nat@.:(((AC)B)D)/s@00', True, 3),
            ('pi@.:(((CA)B)D)', True, 4),
        ],
    },
    "braid_1_1_1": {
        "group": "braided",
        "about": "reversing ABC: hexagons for A passing BC against C passing AB",
        "source": (('A', 'B'), 'C'),
        "P": [('s', (0,)), ('a', ()), ('s', (1,)), ('ai', ()), ('s', (0,)), ('a', ())],
        "Q": [('a', ()), ('s', (1,)), ('ai', ()), ('s', (0,)), ('a', ()), ('s', (1,))],
        "left": [
            ('zeta@.:((AB)C)', False, 0),
            ('cancel-a@.:((BC)A)', False, 2),
            ('nat@.:(A(BC))/s@1', True, 1),
            ('cancel-ai@.:(A(CB))', True, 2),
            ('zeta@.:((AC)B)', True, 3),
        ],
        "right": [
            ('xi@.:(B(AC))', False, 2),
            ('cancel-a@.:((BA)C)', False, 1),
            ('nat@.:((AB)C)/s@0', False, 0),
            ('cancel-ai@.:(C(BA))', False, 2),
            ('cancel-ai@.:(C(AB))', True, 1),
            ('cancel-a@.:((AB)C)', True, 0),
            ('xi@.:(A(BC))', True, 1),
        ],
    },
    "syllepsis_1_2": {
        "group": "sylleptic",
        "about": "double braiding of A past BC against the hexagons",
        "source": (('A', 'B'), 'C'),
        "P": [('a', ()), ('s', ()), ('a', ()), ('ai', ()), ('s', ()), ('ai', ())],
        "Q": [],
        "left": [
            ('cancel-a@.:((BC)A)', False, 2),
            ('nu@.:(A(BC))', False, 1),
            ('cancel-a@.:((AB)C)', False, 0),
        ],
        "right": [
            ('zeta@.:((AB)C)', True, 0),
            ('xi@.:(B(CA))', True, 3),
            ('nu@1:(B(AC))', False, 2),
            ('cancel-a@.:((BA)C)', False, 1),
            ('nu@0:((AB)C)', False, 0),
        ],
    },
    "syllepsis_2_1": {
        "group": "sylleptic",
        "about": "double braiding of AB past C against the hexagons",
        "source": ('A', ('B', 'C')),
        "P": [('ai', ()), ('s', ()), ('ai', ()), ('a', ()), ('s', ()), ('a', ())],
        "Q": [],
        "left": [
            ('cancel-ai@.:(C(AB))', False, 2),
            ('nu@.:((AB)C)', False, 1),
            ('cancel-ai@.:(A(BC))', False, 0),
        ],
        "right": [
            ('xi@.:(A(BC))', True, 0),
            ('zeta@.:((CA)B)', True, 3),
            ('nu@0:((AC)B)', False, 2),
            ('cancel-ai@.:(A(CB))', False, 1),
            ('nu@1:(A(BC))', False, 0),
        ],
    },
    "symmetry": {
        "group": "symmetric",
        "about": "triple braiding: syllepsis on the left or on the right",
        "source": ('A', 'B'),
        "P": [('s', ()), ('s', ()), ('s', ())],
        "Q": [('s', ())],
        "left": [
            ('nu@.:(AB)', False, 0),
        ],
        "right": [
            ('nu@.:(BA)', False, 1),
        ],
    },
}
