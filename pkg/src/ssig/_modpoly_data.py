"""Classical modular polynomial coefficient tables.

Generated by tools/gen_modpoly.py from exact q-expansions;
do not edit by hand.  Keys are (x_exp, y_exp) pairs.
"""

MODULAR_POLYNOMIALS = {
    2: {
        (3, 0): 1,
        (2, 2): -1,
        (2, 1): 1488,
        (2, 0): -162000,
        (1, 2): 1488,
        (1, 1): 40773375,
        (1, 0): 8748000000,
        (0, 3): 1,
        (0, 2): -162000,
        (0, 1): 8748000000,
        (0, 0): -157464000000000,
    },
    3: {
        (4, 0): 1,
        (3, 3): -1,
        (3, 2): 2232,
        (3, 1): -1069956,
        (3, 0): 36864000,
        (2, 3): 2232,
        (2, 2): 2587918086,
        (2, 1): 8900222976000,
        (2, 0): 452984832000000,
        (1, 3): -1069956,
        (1, 2): 8900222976000,
        (1, 1): -770845966336000000,
        (1, 0): 1855425871872000000000,
        (0, 4): 1,
        (0, 3): 36864000,
        (0, 2): 452984832000000,
        (0, 1): 1855425871872000000000,
    },
    5: {
        (6, 0): 1,
        (5, 5): -1,
        (5, 4): 3720,
        (5, 3): -4550940,
        (5, 2): 2028551200,
        (5, 1): -246683410950,
        (5, 0): 1963211489280,
        (4, 5): 3720,
        (4, 4): 1665999364600,
        (4, 3): 107878928185336800,
        (4, 2): 383083609779811215375,
        (4, 1): 128541798906828816384000,
        (4, 0): 1284733132841424456253440,
        (3, 5): -4550940,
        (3, 4): 107878928185336800,
        (3, 3): -441206965512914835246100,
        (3, 2): 26898488858380731577417728000,
        (3, 1): -192457934618928299655108231168000,
        (3, 0): 280244777828439527804321565297868800,
        (2, 5): 2028551200,
        (2, 4): 383083609779811215375,
        (2, 3): 26898488858380731577417728000,
        (2, 2): 5110941777552418083110765199360000,
        (2, 1): 36554736583949629295706472332656640000,
        (2, 0): 6692500042627997708487149415015068467200,
        (1, 5): -246683410950,
        (1, 4): 128541798906828816384000,
        (1, 3): -192457934618928299655108231168000,
        (1, 2): 36554736583949629295706472332656640000,
        (1, 1): -264073457076620596259715790247978782949376,
        (1, 0): 53274330803424425450420160273356509151232000,
        (0, 6): 1,
        (0, 5): 1963211489280,
        (0, 4): 1284733132841424456253440,
        (0, 3): 280244777828439527804321565297868800,
        (0, 2): 6692500042627997708487149415015068467200,
        (0, 1): 53274330803424425450420160273356509151232000,
        (0, 0): 141359947154721358697753474691071362751004672000,
    },
    7: {
        (8, 0): 1,
        (7, 7): -1,
        (7, 6): 5208,
        (7, 5): -10246068,
        (7, 4): 9437674400,
        (7, 3): -4079701128594,
        (7, 2): 720168419610864,
        (7, 1): -34993297342013192,
        (7, 0): 104545516658688000,
        (6, 7): 5208,
        (6, 6): 312598931380281,
        (6, 5): 177089350028475373552,
        (6, 4): 4460942463213898353207432,
        (6, 3): 16125487429368412743622133040,
        (6, 2): 10685207605419433304631062899228,
        (6, 1): 1038063543615451121419229773824000,
        (6, 0): 3643255017844740441130401792000000,
        (5, 7): -10246068,
        (5, 6): 177089350028475373552,
        (5, 5): -18300817137706889881369818348,
        (5, 4): 14066810691825882583305340438456800,
        (5, 3): -901645312135695263877115693740562092344,
        (5, 2): 11269804827778129625111322263056523132928000,
        (5, 1): -40689839325168186578698294668599003971584000000,
        (5, 0): 42320664241971721884753245384947305283584000000000,
        (4, 7): 9437674400,
        (4, 6): 4460942463213898353207432,
        (4, 5): 14066810691825882583305340438456800,
        (4, 4): 88037255060655710247136461896264828390470,
        (4, 3): 17972351380696034759035751584170427941396480000,
        (4, 2): 308718989330868920558541707287296140145328128000000,
        (4, 1): 553293497305121712634517214392820316998991872000000000,
        (4, 0): 41375720005635744770247248526572116368162816000000000000,
        (3, 7): -4079701128594,
        (3, 6): 16125487429368412743622133040,
        (3, 5): -901645312135695263877115693740562092344,
        (3, 4): 17972351380696034759035751584170427941396480000,
        (3, 3): -5397554444336630396660447092290576395211374592000000,
        (3, 2): 72269669689202948469186346100000679630099972096000000000,
        (3, 1): -129686683986501811181602978946723823397619367936000000000000,
        (3, 0): 13483958224762213714698012883865296529472356352000000000000000,
        (2, 7): 720168419610864,
        (2, 6): 10685207605419433304631062899228,
        (2, 5): 11269804827778129625111322263056523132928000,
        (2, 4): 308718989330868920558541707287296140145328128000000,
        (2, 3): 72269669689202948469186346100000679630099972096000000000,
        (2, 2): -46666007311089950798495647194817495401448341504000000000000,
        (2, 1): -838538082798149465723818021032241603179964268544000000000000000,
        (2, 0): 1464765079488386840337633731737402825128271675392000000000000000000,
        (1, 7): -34993297342013192,
        (1, 6): 1038063543615451121419229773824000,
        (1, 5): -40689839325168186578698294668599003971584000000,
        (1, 4): 553293497305121712634517214392820316998991872000000000,
        (1, 3): -129686683986501811181602978946723823397619367936000000000000,
        (1, 2): -838538082798149465723818021032241603179964268544000000000000000,
        (1, 1): 1221349308261453750252370983314569119494710493184000000000000000000,
        (0, 8): 1,
        (0, 7): 104545516658688000,
        (0, 6): 3643255017844740441130401792000000,
        (0, 5): 42320664241971721884753245384947305283584000000000,
        (0, 4): 41375720005635744770247248526572116368162816000000000000,
        (0, 3): 13483958224762213714698012883865296529472356352000000000000000,
        (0, 2): 1464765079488386840337633731737402825128271675392000000000000000000,
    },
}
