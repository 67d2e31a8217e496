"""Reference polynomials as printed expressions (inputs to make_golden.py)."""

E2 = "a**4*r**5 - 4*a**2*r**9 - 2*a**2*r**7 + 12*a**2*r**5 - 4*a*d**2 - 24*a*r**10 + 4*a*r**8 + 8*a*r**6 + 8*d*r**5 + 60*r**11 - 39*r**9 - 52*r**7 + 32*r**5"
E3 = "4*a**2*d*r**10 - 8*a*r**15 - d**4 - 12*d**2*r**10 + 2*d**2*r**8 + 4*d**2*r**6 - 8*d*r**14 - 4*d*r**12 + 24*d*r**10 - 32*r**20 + 52*r**18 + 39*r**16 - 60*r**14"
F = "a**16 - 16*a**14*r**4 - 8*a**14*r**2 + 48*a**14 + 96*a**12*r**8 + 336*a**12*r**6 - 708*a**12*r**4 - 496*a**12*r**2 + 992*a**12 - 384*a**11*r**5 - 256*a**10*r**12 - 3392*a**10*r**10 + 1264*a**10*r**8 + 13832*a**10*r**6 - 10448*a**10*r**4 - 11840*a**10*r**2 + 11520*a**10 + 2304*a**9*r**9 + 1152*a**9*r**7 - 6912*a**9*r**5 + 256*a**8*r**16 + 13056*a**8*r**14 + 33696*a**8*r**12 - 97072*a**8*r**10 - 57306*a**8*r**8 + 227728*a**8*r**6 - 52192*a**8*r**4 - 145152*a**8*r**2 + 82176*a**8 - 4096*a**7*r**13 + 11264*a**7*r**11 + 13568*a**7*r**9 - 1024*a**7*r**7 - 28672*a**7*r**5 - 17408*a**6*r**18 - 223744*a**6*r**16 + 102016*a**6*r**14 + 1108816*a**6*r**12 - 918712*a**6*r**10 - 1410544*a**6*r**8 + 1855616*a**6*r**6 + 160256*a**6*r**4 - 1000448*a**6*r**2 + 368640*a**6 + 4096*a**5*r**17 - 159744*a**5*r**15 - 133632*a**5*r**13 + 558336*a**5*r**11 - 41472*a**5*r**9 - 397312*a**5*r**7 + 135168*a**5*r**5 + 411136*a**4*r**20 + 1459712*a**4*r**18 - 4870752*a**4*r**16 - 1995408*a**4*r**14 + 12098300*a**4*r**12 - 3155536*a**4*r**10 - 11363808*a**4*r**8 + 7660032*a**4*r**6 + 2688512*a**4*r**4 - 3907584*a**4*r**2 + 1015808*a**4 + 122880*a**3*r**19 + 2347008*a**3*r**17 - 4035584*a**3*r**15 - 2945920*a**3*r**13 + 7126016*a**3*r**11 - 643072*a**3*r**9 - 3284992*a**3*r**7 + 1245184*a**3*r**5 - 3916800*a**2*r**22 + 2157312*a**2*r**20 + 23243456*a**2*r**18 - 24547376*a**2*r**16 - 33596872*a**2*r**14 + 54808208*a**2*r**12 + 6052288*a**2*r**10 - 43654912*a**2*r**8 + 16301056*a**2*r**6 + 9723904*a**2*r**4 - 8060928*a**2*r**2 + 1572864*a**2 - 3010560*a*r**21 + 12288*a*r**19 + 14575872*a*r**17 - 9259392*a*r**15 - 16972544*a*r**13 + 17420288*a*r**11 + 3018752*a*r**9 - 8192000*a*r**7 + 2359296*a*r**5 + 12960000*r**24 - 30931200*r**22 - 16244128*r**20 + 96898160*r**18 - 41403359*r**16 - 100331856*r**14 + 93598176*r**12 + 26662144*r**10 - 61456128*r**8 + 14524416*r**6 + 11501568*r**4 - 6815744*r**2 + 1048576"
F_AT_1 = "aa**16 + 24*aa**14 + 220*aa**12 - 384*aa**11 + 680*aa**10 - 3456*aa**9 + 5190*aa**8 - 8960*aa**7 + 24488*aa**6 - 34560*aa**5 + 40412*aa**4 - 68480*aa**3 + 82200*aa**2 - 48000*aa + 10625"
F_AT_0 = "aa**16 + 48*aa**14 + 992*aa**12 + 11520*aa**10 + 82176*aa**8 + 368640*aa**6 + 1015808*aa**4 + 1572864*aa**2 + 1048576"
F_AT_1_FACTORED = "(aa - 1)**6*(aa**2 - 2*aa + 17)*(aa**2 + 2*aa + 5)**4"
F_AT_0_FACTORED = "(aa**2 + 4)**4*(aa**2 + 8)**4"
H24_FACTORED = "256*r**16*(-a + 3*r)**2*(-a + 5*r)**2*(a + 3*r)**2*(a + 5*r)**2"
DISC_CONSTANT = "8148143905337944345073782753637512644205873574663745002544561797417525199053346824733589504"
P6 = "s**6 + 15*s**5 - 1585*s**4 + 3052*s**3 - 1585*s**2 + 15*s + 1"
P28 = "103680000*s**28 - 7521292800*s**27 + 169819194368*s**26 - 1294911396672*s**25 + 5782812799560*s**24 - 16312796194682*s**23 + 26530306841415*s**22 - 10896270624660*s**21 - 54726287337296*s**20 + 133633789213194*s**19 - 113160119424615*s**18 - 66661996599936*s**17 + 257666706220630*s**16 - 219804850864326*s**15 - 42039280815751*s**14 + 237530759945852*s**13 - 176268442531244*s**12 - 7327917745386*s**11 + 97772884071815*s**10 - 65474588747304*s**9 + 8804890164542*s**8 + 13121572011040*s**7 - 9871152051904*s**6 + 3433840428544*s**5 - 664203117056*s**4 + 64335036416*s**3 - 1308557312*s**2 - 162529280*s - 2097152"
F_AT_S1_FACTORED = "(y - 1)**6*(y**2 - 2*y + 17)*(y**2 + 2*y + 5)**4"
