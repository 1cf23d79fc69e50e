"""Frozen instances that drive each branch of the case machinery.

Collected by randomized search over small cubic graphs and their
colourings (plus pattern construction for the rarest branch), then
frozen so the deep branches are exercised deterministically.

MACHINE_INSTANCES: label -> (graph6, colouring, (w, u, v, s), target
colouring); the machine is entered with designated pair (u, v).
SOLVE_INSTANCES: label -> (graph6, alpha, beta) hitting the label
through the public solve() dispatch.
NET_INSTANCES: label -> (graph6, colouring) for the claw-free
pendant-realignment branches.
"""

MACHINE_INSTANCES = {
    'L4.Case1': (
        'IsX@GgQAW',
        (1, 2, 3, 2, 1, 3, 2, 1, 3, 2),
        (0, 1, 3, 2),
        (1, 2, 2, 2, 1, 1, 3, 3, 1, 2),
    ),
    'L4.Case2.1': (
        'IsX@GgQAW',
        (1, 2, 2, 3, 3, 1, 3, 2, 2, 1),
        (0, 1, 2, 3),
        (1, 2, 2, 2, 1, 1, 3, 3, 1, 2),
    ),
    'L4.Case2.2': (
        'IsP@PGXD_',
        (1, 2, 2, 3, 1, 3, 3, 1, 2, 2),
        (0, 1, 2, 3),
        (1, 2, 2, 2, 1, 3, 3, 1, 3, 1),
    ),
    'L4.Case2.2.1': (
        'Ib_L@pC@g',
        (1, 2, 2, 3, 2, 3, 3, 1, 1, 2),
        (0, 1, 4, 6),
        (1, 2, 1, 3, 3, 1, 3, 2, 3, 2),
    ),
    'L4.Case2.2.2': (
        'MIKD?EC_?Ah_CI@S?',
        (3, 2, 1, 1, 2, 2, 2, 1, 1, 1, 2, 1, 3, 3),
        (0, 8, 9, 6),
        (1, 1, 2, 2, 1, 3, 3, 1, 2, 3, 2, 2, 3, 2),
    ),
    'L4.Case3': (
        'IsXP?cH@g',
        (1, 2, 2, 3, 3, 1, 3, 2, 1, 2),
        (0, 1, 2, 3),
        (1, 2, 2, 2, 1, 1, 1, 3, 2, 3),
    ),
    'L4.Case3.1': (
        'IsXP?cH@g',
        (1, 2, 2, 3, 3, 1, 3, 2, 1, 2),
        (0, 1, 2, 3),
        (1, 2, 2, 2, 1, 1, 1, 3, 2, 3),
    ),
    'L4.Case3.2.1': (
        'KpcA?WEGoHI@',
        (1, 2, 3, 2, 3, 2, 3, 1, 1, 2, 3, 1),
        (0, 2, 4, 1),
        (1, 2, 2, 1, 2, 2, 1, 1, 3, 3, 1, 3),
    ),
    'L4.Case3.2.2': (
        'KCPD?ocPcBF?',
        (1, 2, 2, 2, 1, 3, 3, 3, 1, 1, 2, 3),
        (0, 3, 10, 6),
        (1, 1, 1, 2, 2, 2, 2, 1, 3, 3, 2, 3),
    ),
    'L4.Case4': (
        'I{O_ogK?w',
        (1, 2, 3, 2, 1, 1, 3, 3, 2, 1),
        (3, 6, 7, 0),
        (1, 2, 3, 2, 1, 1, 3, 3, 3, 1),
    ),
    'L4.Case4.1': (
        'K?f@?hIC`A{?',
        (1, 2, 2, 1, 2, 3, 1, 2, 3, 3, 1, 3),
        (0, 5, 11, 4),
        (1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 2, 2),
    ),
    'L4.Case4.2': (
        'I{O_ogK?w',
        (1, 2, 3, 2, 1, 1, 3, 3, 2, 1),
        (3, 6, 7, 0),
        (1, 2, 3, 2, 1, 1, 3, 3, 3, 1),
    ),
    'L4.Case4.norm': (
        'I{O_ogK?w',
        (1, 2, 3, 2, 1, 1, 3, 3, 2, 1),
        (3, 6, 7, 0),
        (1, 2, 3, 2, 1, 1, 3, 3, 3, 1),
    ),
    'L4.F12': (
        'IsP@PGXD_',
        (1, 2, 2, 3, 1, 3, 3, 1, 2, 1),
        (0, 1, 2, 3),
        (1, 2, 2, 2, 1, 3, 3, 1, 3, 1),
    ),
    'L4.recolour': (
        'IsP@PGXD_',
        (1, 2, 2, 3, 1, 1, 3, 3, 2, 2),
        (0, 1, 2, 3),
        (1, 2, 2, 2, 1, 3, 3, 1, 3, 1),
    ),
}

SOLVE_INSTANCES = {
    'L2.Claim1': (
        'M?EAaX_g@?oDC_B?_',
        (2, 3, 2, 3, 1, 1, 2, 2, 1, 3, 1, 3, 1, 3),
        (1, 1, 1, 1, 2, 2, 3, 3, 3, 2, 3, 2, 2, 3),
    ),
    'L2.Claim2.flip': (
        'M?EAaX_g@?oDC_B?_',
        (2, 3, 2, 3, 1, 1, 2, 2, 1, 3, 1, 3, 1, 3),
        (1, 1, 1, 1, 2, 2, 3, 3, 3, 2, 3, 2, 2, 3),
    ),
    'L2.Claim2.prep': (
        'M?EAaX_g@?oDC_B?_',
        (2, 3, 2, 3, 1, 1, 2, 2, 1, 3, 1, 3, 1, 3),
        (1, 1, 1, 1, 2, 2, 3, 3, 3, 2, 3, 2, 2, 3),
    ),
    'L2.clique': (
        'K`CI@GL_a_sO',
        (1, 3, 2, 3, 1, 3, 1, 1, 2, 3, 1, 3),
        (1, 2, 3, 2, 1, 3, 1, 1, 2, 3, 1, 2),
    ),
    'L3.Case1': (
        'K`?HgR_bAAAH',
        (1, 2, 1, 2, 3, 1, 3, 2, 3, 2, 1, 3),
        (3, 2, 2, 3, 3, 2, 1, 2, 1, 1, 3, 1),
    ),
    'L3.Case1.swap': (
        'K`?HgR_bAAAH',
        (1, 2, 1, 2, 3, 1, 3, 2, 3, 2, 1, 3),
        (3, 2, 2, 3, 3, 2, 1, 2, 1, 1, 3, 1),
    ),
    'L3.Case2.P12': (
        'K`?HgR_bAAAH',
        (2, 1, 1, 2, 1, 2, 3, 3, 3, 3, 2, 1),
        (2, 1, 1, 3, 2, 1, 2, 3, 3, 3, 2, 1),
    ),
    'L3.Case2.P23': (
        'K`?HgR_bAAAH',
        (1, 2, 1, 3, 3, 1, 2, 1, 3, 2, 3, 2),
        (3, 2, 3, 1, 3, 1, 2, 2, 1, 2, 1, 3),
    ),
    'L3.Case2.double': (
        'Ka_DP?dSOWA`',
        (3, 2, 1, 3, 1, 1, 2, 2, 3, 1, 3, 2),
        (2, 3, 2, 2, 3, 2, 1, 3, 1, 1, 1, 3),
    ),
    'L3.reversed': (
        'K`?HgR_bAAAH',
        (1, 3, 3, 1, 3, 1, 2, 2, 2, 2, 1, 3),
        (1, 3, 1, 2, 3, 1, 3, 2, 2, 2, 1, 3),
    ),
    'L4.F12': (
        'Kc_q?SOGhQGc',
        (2, 1, 1, 1, 3, 3, 3, 1, 3, 2, 2, 2),
        (2, 3, 3, 1, 3, 2, 1, 2, 3, 2, 1, 1),
    ),
    'L4.wset.alpha': (
        'Kc_q?SOGhQGc',
        (2, 1, 1, 1, 3, 3, 3, 1, 3, 2, 2, 2),
        (2, 3, 3, 1, 3, 2, 1, 2, 3, 2, 1, 1),
    ),
    'L4.wset.beta': (
        'Kc_q?SOGhQGc',
        (2, 1, 1, 1, 3, 3, 3, 1, 3, 2, 2, 2),
        (2, 3, 3, 1, 3, 2, 1, 2, 3, 2, 1, 1),
    ),
    'dispatch.clawfree': (
        'K`?HgR_bAAAH',
        (1, 2, 1, 2, 3, 1, 3, 2, 3, 2, 1, 3),
        (3, 2, 2, 3, 3, 2, 1, 2, 1, 1, 3, 1),
    ),
    'dispatch.separator': (
        'M?EAaX_g@?oDC_B?_',
        (2, 3, 2, 3, 1, 1, 2, 2, 1, 3, 1, 3, 1, 3),
        (1, 1, 1, 1, 2, 2, 3, 3, 3, 2, 3, 2, 2, 3),
    ),
}

NET_INSTANCES = {
    'L3.Case2.P12': (
        'K{CY?SBG?G_F',
        (1, 2, 3, 2, 1, 3, 3, 2, 1, 1, 2, 3),
    ),
    'L3.Case2.P13': (
        'QwCW?CB_?__RO?A?_GX??@?C?_W',
        (1, 2, 3, 2, 3, 1, 2, 3, 1, 2, 1, 3, 3, 1, 2, 1, 2, 3),
    ),
    'L3.Case2.P23': (
        'K{CY?SBG?G_F',
        (1, 2, 3, 2, 3, 1, 3, 1, 2, 1, 2, 3),
    ),
    'L3.Case2.double': (
        'K{CY?SBG?G_F',
        (1, 2, 3, 2, 3, 1, 3, 2, 1, 1, 2, 3),
    ),
}
