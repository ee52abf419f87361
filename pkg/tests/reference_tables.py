"""Reference counts of labelled non-projective members of the class.

ROWS_BY_EDGES: counts by (vertices, edges); TOTALS: counts by vertices.
The IRREDUCIBLE_* tables restrict to graphs with no vertex of degree 2.
"""

ROWS_BY_EDGES = {
    (8, 18): 280,
    (8, 19): 280,
    (9, 19): 50400,
    (9, 20): 93240,
    (9, 21): 47880,
    (10, 20): 5292000,
    (10, 21): 15044400,
    (10, 22): 15510600,
    (10, 23): 5972400,
    (10, 24): 239400,
    (11, 21): 426888000,
    (11, 22): 1700899200,
    (11, 23): 2724044400,
    (11, 24): 2136842400,
    (11, 25): 773295600,
    (11, 26): 94386600,
    (11, 27): 7900200,
    (12, 22): 29455272000,
    (12, 23): 155542464000,
    (12, 24): 348414066000,
    (12, 25): 424294516800,
    (12, 26): 297599563800,
    (12, 27): 118905448200,
    (12, 28): 27683548200,
    (12, 29): 4821201000,
    (12, 30): 410810400,
    (13, 23): 1838008972800,
    (13, 24): 12383684913600,
    (13, 25): 36576568828800,
    (13, 26): 61986597472800,
    (13, 27): 66199273620480,
    (13, 28): 46419992138520,
    (13, 29): 22180672954440,
    (13, 30): 7737403073400,
    (13, 31): 2053743892200,
    (13, 32): 348540192000,
    (13, 33): 27935107200,
    (14, 24): 107217190080000,
    (14, 25): 896474952172800,
    (14, 26): 3359265613704000,
    (14, 27): 7460402644094400,
    (14, 28): 10948159170748800,
    (14, 29): 11253868616390400,
    (14, 30): 8467602606022560,
    (14, 31): 4876995169606560,
    (14, 32): 2222245323698400,
    (14, 33): 785187373370400,
    (14, 34): 197208318106800,
    (14, 35): 31064455422000,
    (14, 36): 2294786894400,
    (15, 25): 5973529161600000,
    (15, 26): 60679359861120000,
    (15, 27): 280619124786000000,
    (15, 28): 785755439324856000,
    (15, 29): 1496142328612932000,
    (15, 30): 2068477720590481200,
    (15, 31): 2175937397296462800,
    (15, 32): 1810128996903427200,
    (15, 33): 1223242124356652400,
    (15, 34): 673154380612513800,
    (15, 35): 293316332440131000,
    (15, 36): 96295664217753000,
    (15, 37): 22260497063805000,
    (15, 38): 3218036781960000,
    (15, 39): 218263565520000,
    (16, 26): 322570574726400000,
    (16, 27): 3914073525922560000,
    (16, 28): 21877169871997440000,
    (16, 29): 75157668529175232000,
    (16, 30): 178928606393593056000,
    (16, 31): 316283670286218835200,
    (16, 32): 435483254883942064800,
    (16, 33): 484253520685973438400,
    (16, 34): 445576710488584474800,
    (16, 35): 341998556200139638800,
    (16, 36): 216864722075241240000,
    (16, 37): 111029372376938215200,
    (16, 38): 44479356838490574000,
    (16, 39): 13374653821603074000,
    (16, 40): 2831094029443680000,
    (16, 41): 375386906774880000,
    (16, 42): 23417178744960000,
}

TOTALS = {
    8: 560,
    9: 191520,
    10: 42058800,
    11: 7864256400,
    12: 1407126890400,
    13: 257752421166240,
    14: 50607986220311520,
    15: 10995419195575214400,
    16: 2692773804667509763200,
    17: 747221542837742897724800,
    18: 233698171655650029030743040,
    19: 81472765051132560093387934080,
    20: 31268587126068905034073041062400,
}

IRREDUCIBLE_ROWS_BY_EDGES = {
    (8, 18): 280,
    (8, 19): 280,
    (9, 19): 5040,
    (10, 20): 25200,
    (10, 22): 226800,
    (10, 23): 466200,
    (10, 24): 239400,
    (11, 23): 10256400,
    (11, 24): 30492000,
    (11, 25): 43520400,
    (11, 26): 31185000,
    (11, 27): 7900200,
    (12, 24): 189604800,
    (12, 25): 1079416800,
    (12, 26): 3044487600,
    (12, 27): 5080614000,
    (12, 28): 4776294600,
    (12, 29): 2261536200,
    (12, 30): 410810400,
    (13, 25): 1686484800,
    (13, 26): 22875652800,
    (13, 27): 126680954400,
    (13, 28): 382608626400,
    (13, 29): 700723623600,
    (13, 30): 788388400800,
    (13, 31): 525156231600,
    (13, 32): 188324136000,
    (13, 33): 27935107200,
    (14, 26): 6054048000,
    (14, 27): 285751065600,
    (14, 28): 3361812854400,
    (14, 29): 17840270448000,
    (14, 30): 55133382704400,
    (14, 31): 108994658572800,
    (14, 32): 141179453415000,
    (14, 33): 118498240060200,
    (14, 34): 61801664324400,
    (14, 35): 18158435895600,
    (14, 36): 2294786894400,
    (15, 28): 1961511552000,
    (15, 29): 57537672192000,
    (15, 30): 557188343712000,
    (15, 31): 2827950253128000,
    (15, 32): 8936155496268000,
    (15, 33): 18886100303070000,
    (15, 34): 27395286118200000,
    (15, 35): 27296971027326000,
    (15, 36): 18324093378591000,
    (15, 37): 7906712877063000,
    (15, 38): 1978851858984000,
    (15, 39): 218263565520000,
    (16, 29): 5811886080000,
    (16, 30): 621544891968000,
    (16, 31): 11935943091072000,
    (16, 32): 101350194001056000,
    (16, 33): 499371733276416000,
    (16, 34): 1611221546830896000,
    (16, 35): 3605404135132800000,
    (16, 36): 5738963267481444000,
    (16, 37): 6540526990277280000,
    (16, 38): 5293490794557966000,
    (16, 39): 2967845927880834000,
    (16, 40): 1095216458944608000,
    (16, 41): 239190441890400000,
    (16, 42): 23417178744960000,
    (17, 31): 3903916528512000,
    (17, 32): 174648084811200000,
    (17, 33): 2606052624215040000,
    (17, 34): 20178959825344320000,
    (17, 35): 97287841256493888000,
    (17, 36): 319780940570307216000,
    (17, 37): 751384930811218704000,
    (17, 38): 1292496613555066920000,
    (17, 39): 1642597679422623924000,
    (17, 40): 1539140405659676820000,
    (17, 41): 1049167407329489448000,
    (17, 42): 505608857591934096000,
    (17, 43): 163183484418946992000,
    (17, 44): 31635477128166912000,
    (17, 45): 2784602773016064000,
}

IRREDUCIBLE_TOTALS = {
    8: 560,
    9: 5040,
    10: 957600,
    11: 123354000,
    12: 16842764400,
    13: 2764379217600,
    14: 527554510282800,
    15: 114387072405606000,
    16: 27728561968887780000,
    17: 7418031804967840056000,
    18: 2167306256125914230527200,
    19: 685709965521372865035362400,
    20: 233306923207078035272369412000,
}
