"""Normalized universal series as printed in the data appendix, in fixture text format.

Generated once from the printed tables; edit only to fix transcription.
Each block starts with "== rank=R name=N order=O" and lists
"exponent_num/exponent_den coefficient" lines.
"""

APPENDIX_TEXT = """\
== rank=2 name=A order=15
0/1 1
2/1 12
4/1 90
6/1 520
8/1 2535
10/1 10908
12/1 42614
14/1 153960
== rank=2 name=B order=15
0/1 1
1/1 -4
2/1 7
3/1 -12
4/1 23
5/1 -36
6/1 56
7/1 -88
8/1 128
9/1 -188
10/1 273
11/1 -384
12/1 536
13/1 -740
14/1 1009
== rank=2 name=C11 order=15
0/1 1
1/1 2
2/1 -1
3/1 -2
4/1 3
5/1 2
6/1 -4
7/1 -4
8/1 5
9/1 8
10/1 -8
11/1 -10
12/1 11
13/1 12
14/1 -15
== rank=3 name=A order=11
0/1 1
3/1 12
6/1 90
9/1 520
== rank=3 name=B order=11
0/1 1
1/1 -9/4
2/1 -135/8
3/1 5687/64
4/1 -21357/128
5/1 91395/512
6/1 -976831/1024
7/1 127326087/16384
8/1 -1460793393/32768
9/1 29764293777/131072
10/1 -305367716529/262144
== rank=3 name=C11 order=11
0/1 1
1/1 -7/4
2/1 239/16
3/1 -2361/32
4/1 100203/256
5/1 -1106023/512
6/1 24745059/2048
7/1 -280615001/4096
8/1 25731005619/65536
9/1 -297290563675/131072
10/1 6913461089017/524288
== rank=3 name=C22 order=11
0/1 1
1/1 -7/4
2/1 239/16
3/1 -2361/32
4/1 100203/256
5/1 -1106023/512
6/1 24745059/2048
7/1 -280615001/4096
8/1 25731005619/65536
9/1 -297290563675/131072
10/1 6913461089017/524288
== rank=3 name=C12 order=11
0/1 1
1/1 5
2/1 -7
3/1 3
4/1 15
5/1 -32
6/1 9
7/1 58
8/1 -96
9/1 22
10/1 149
== rank=4 name=A order=13
0/1 1
4/1 12
8/1 90
12/1 520
== rank=4 name=B order=13
0/1 1
1/1 -16/9
2/1 -644/81
3/1 -18560/729
4/1 1384039/6561
5/1 -169424/6561
6/1 -221992196/177147
7/1 786352768/1594323
8/1 260413701079/43046721
9/1 -3655109767904/387420489
10/1 68835523340380/3486784401
11/1 -2818123363388416/31381059609
12/1 -24806213541619144/282429536481
== rank=4 name=C11 order=13
0/1 1
1/1 -11/9
2/1 -20/9
3/1 29737/729
4/1 -1005253/6561
5/1 2696689/19683
6/1 289688671/177147
7/1 -16079563135/1594323
8/1 115191654533/4782969
9/1 15075699699385/387420489
10/1 -1982510147928208/3486784401
11/1 2532736814456179/1162261467
12/1 -474057101483673346/282429536481
== rank=4 name=C33 order=13
0/1 1
1/1 -11/9
2/1 -20/9
3/1 29737/729
4/1 -1005253/6561
5/1 2696689/19683
6/1 289688671/177147
7/1 -16079563135/1594323
8/1 115191654533/4782969
9/1 15075699699385/387420489
10/1 -1982510147928208/3486784401
11/1 2532736814456179/1162261467
12/1 -474057101483673346/282429536481
== rank=4 name=C22 order=13
0/1 1
1/1 -32/9
2/1 1058/81
3/1 -15808/729
4/1 -83617/6561
5/1 4834592/19683
6/1 -150128758/177147
7/1 1226683328/1594323
8/1 283859838659/43046721
9/1 -14627747102272/387420489
10/1 285981994115234/3486784401
11/1 4003447693683712/31381059609
12/1 -471239600612088452/282429536481
== rank=4 name=C12 order=13
0/1 1
1/1 32/9
2/1 290/81
3/1 -8768/729
4/1 15199/6561
5/1 2519200/59049
6/1 -22602614/177147
7/1 399387712/1594323
8/1 2430989377/14348907
9/1 -1587952009664/387420489
10/1 57170732310946/3486784401
11/1 -636801299852288/31381059609
12/1 -34921739613648004/282429536481
== rank=4 name=C23 order=13
0/1 1
1/1 32/9
2/1 290/81
3/1 -8768/729
4/1 15199/6561
5/1 2519200/59049
6/1 -22602614/177147
7/1 399387712/1594323
8/1 2430989377/14348907
9/1 -1587952009664/387420489
10/1 57170732310946/3486784401
11/1 -636801299852288/31381059609
12/1 -34921739613648004/282429536481
== rank=4 name=C13 order=13
0/1 1
1/1 2/9
2/1 29/3
3/1 -50
4/1 1595/9
5/1 -1642/3
6/1 1564
7/1 -37316/9
8/1 30863/3
9/1 -24248
10/1 493144/9
11/1 -357934/3
12/1 251467
== rank=5 name=A order=13
0/1 1
5/1 12
10/1 90
== rank=5 name=B order=13
0/1 1
1/1 -25/16
2/1 -6425/1152
3/1 -328325/36864
4/1 -107959975/2654208
5/1 19714416547/42467328
6/1 -682323694025/3057647616
7/1 -157438303448125/195689447424
8/1 -42125816659848475/14089640214528
9/1 -1222748753871559175/225434243432448
10/1 91589140507399236041/1803473947459584
11/1 -1482872905939874912425/57711166318706688
12/1 -999082311255603435795425/12465611924840644608
== rank=5 name=C11 order=13
0/1 1
1/1 -53/48
2/1 -455/768
3/1 -214105/55296
4/1 137066833/1769472
5/1 -32262250883/127401984
6/1 504641046613/2038431744
7/1 -35290739977297/146767085568
8/1 55324953373355585/9393093476352
9/1 -21106479712125095327/676302730297344
10/1 747314378419516014391/10820843684757504
11/1 -21332084310732182836789/259700248434180096
12/1 3766630856661994639083391/8310407949893763072
== rank=5 name=C44 order=13
0/1 1
1/1 -53/48
2/1 -455/768
3/1 -214105/55296
4/1 137066833/1769472
5/1 -32262250883/127401984
6/1 504641046613/2038431744
7/1 -35290739977297/146767085568
8/1 55324953373355585/9393093476352
9/1 -21106479712125095327/676302730297344
10/1 747314378419516014391/10820843684757504
11/1 -21332084310732182836789/259700248434180096
12/1 3766630856661994639083391/8310407949893763072
== rank=5 name=C22 order=13
0/1 1
1/1 -45/16
2/1 1223/1152
3/1 92759/4096
4/1 -4997165/98304
5/1 -342060809/4718592
6/1 1507052138695/3057647616
7/1 -2357002948433/21743271936
8/1 -64722230546795459/14089640214528
9/1 106028028804927959/8349416423424
10/1 -4606809888515467877/5410421842378752
11/1 -2800069757219943079717/57711166318706688
12/1 -638603945799703782159017/12465611924840644608
== rank=5 name=C33 order=13
0/1 1
1/1 -45/16
2/1 1223/1152
3/1 92759/4096
4/1 -4997165/98304
5/1 -342060809/4718592
6/1 1507052138695/3057647616
7/1 -2357002948433/21743271936
8/1 -64722230546795459/14089640214528
9/1 106028028804927959/8349416423424
10/1 -4606809888515467877/5410421842378752
11/1 -2800069757219943079717/57711166318706688
12/1 -638603945799703782159017/12465611924840644608
== rank=5 name=C12 order=13
0/1 1
1/1 155/48
2/1 3631/2304
3/1 205649/55296
4/1 -28529015/1769472
5/1 -440005171/42467328
6/1 576927703355/6115295232
7/1 -6282551916719/146767085568
8/1 -17020188466524013/28179280429056
9/1 1064059615856431819/676302730297344
10/1 1284173036440886659/1202315964973056
11/1 -990167550880548509473/86566749478060032
12/1 97471092940503634774661/24931223849681289216
== rank=5 name=C34 order=13
0/1 1
1/1 155/48
2/1 3631/2304
3/1 205649/55296
4/1 -28529015/1769472
5/1 -440005171/42467328
6/1 576927703355/6115295232
7/1 -6282551916719/146767085568
8/1 -17020188466524013/28179280429056
9/1 1064059615856431819/676302730297344
10/1 1284173036440886659/1202315964973056
11/1 -990167550880548509473/86566749478060032
12/1 97471092940503634774661/24931223849681289216
== rank=5 name=C13 order=13
0/1 1
1/1 7/48
2/1 15395/2304
3/1 -89765/6144
4/1 114167459/5308416
5/1 -780769727/14155776
6/1 1132411382279/6115295232
7/1 -9159845550413/16307453952
8/1 49255281600761635/28179280429056
9/1 -454493672610745723/75144747810816
10/1 705748856184446680013/32462531054272512
11/1 -6408400678095411411923/86566749478060032
12/1 5938469859966951248118893/24931223849681289216
== rank=5 name=C24 order=13
0/1 1
1/1 7/48
2/1 15395/2304
3/1 -89765/6144
4/1 114167459/5308416
5/1 -780769727/14155776
6/1 1132411382279/6115295232
7/1 -9159845550413/16307453952
8/1 49255281600761635/28179280429056
9/1 -454493672610745723/75144747810816
10/1 705748856184446680013/32462531054272512
11/1 -6408400678095411411923/86566749478060032
12/1 5938469859966951248118893/24931223849681289216
== rank=5 name=C14 order=13
0/1 1
1/1 1/12
2/1 7/36
3/1 1777/108
4/1 -26873/324
5/1 147607/972
6/1 397291/2916
7/1 -11472803/8748
8/1 52508239/26244
9/1 97770619/19683
10/1 -6130025513/236196
11/1 7730522729/354294
12/1 309256092337/2125764
== rank=5 name=C23 order=13
0/1 1
1/1 9/4
2/1 1241/144
3/1 -487/64
4/1 3809/256
5/1 -928975/9216
6/1 1403185/4096
7/1 -53708245/49152
8/1 768441731/196608
9/1 -3604410743/262144
10/1 149919390323/3145728
11/1 -6272767971295/37748736
12/1 9726080833057/16777216
== rank=6 name=B order=13
0/1 1
1/1 -36/25
2/1 -11313/2500
3/1 -3247/625
4/1 -34009767/3125000
5/1 -535278969/19531250
6/1 11160367012447/15625000000
7/1 -21302896097079/97656250000
8/1 -6490052686485657/3906250000000
9/1 -190875372924966819/122070312500000
10/1 -504384643419560112357/48828125000000000
11/1 58192460624892069837/305175781250000000
12/1 7047741381268881396864257/61035156250000000000
== rank=6 name=C12 order=13
0/1 1
1/1 153/50
2/1 3581/2500
3/1 8397/62500
4/1 7193779/1250000
5/1 -3241790199/156250000
6/1 -102108875889/7812500000
7/1 12405919349061/195312500000
8/1 3448498889721291/39062500000000
9/1 -19531005126126831/195312500000000
10/1 -66042687542312025919/48828125000000000
11/1 2951463228003450701163/1220703125000000000
12/1 559872718083081904996467/122070312500000000000
== rank=6 name=C13 order=13
0/1 1
1/1 4/25
2/1 3314/625
3/1 -172232/15625
4/1 2536099/78125
5/1 -1034184364/9765625
6/1 64069351198/244140625
7/1 -3635150349352/6103515625
8/1 212172623155011/152587890625
9/1 -2261465069702616/762939453125
10/1 491082667968865538/95367431640625
11/1 -17291909688546080576/2384185791015625
12/1 501515259998762305004/59604644775390625
== rank=6 name=C14 order=13
0/1 1
1/1 3/50
2/1 631/2500
3/1 322411/31250
4/1 -29736041/1250000
5/1 -814910581/39062500
6/1 1423477353961/7812500000
7/1 -16396918690441/48828125000
8/1 911147429724691/39062500000000
9/1 65177840656010451/48828125000000
10/1 -176306770973531492669/48828125000000000
11/1 1556960276432628476897/305175781250000000
12/1 -421247128876022098732433/122070312500000000000
== rank=6 name=C15 order=13
0/1 1
1/1 1/25
2/1 2/25
3/1 4/25
4/1 633/25
5/1 -3084/25
6/1 1094/5
7/1 -4214/25
8/1 16812/25
9/1 -77554/25
10/1 105088/25
11/1 66776/25
12/1 131021/25
== rank=6 name=C23 order=13
0/1 1
1/1 2
2/1 23/4
3/1 9/2
4/1 -41/16
5/1 -117/8
6/1 -261/32
7/1 369/16
8/1 6907/256
9/1 -3501/128
10/1 -3955/512
11/1 36747/256
12/1 -366245/2048
== rank=6 name=C24 order=13
0/1 1
2/1 5
4/1 -7
6/1 3
8/1 15
10/1 -32
12/1 9
== rank=6 name=C25 order=13
0/1 1
1/1 3/50
2/1 631/2500
3/1 322411/31250
4/1 -29736041/1250000
5/1 -814910581/39062500
6/1 1423477353961/7812500000
7/1 -16396918690441/48828125000
8/1 911147429724691/39062500000000
9/1 65177840656010451/48828125000000
10/1 -176306770973531492669/48828125000000000
11/1 1556960276432628476897/305175781250000000
12/1 -421247128876022098732433/122070312500000000000
== rank=6 name=C34 order=13
0/1 1
1/1 2
2/1 23/4
3/1 9/2
4/1 -41/16
5/1 -117/8
6/1 -261/32
7/1 369/16
8/1 6907/256
9/1 -3501/128
10/1 -3955/512
11/1 36747/256
12/1 -366245/2048
== rank=6 name=C35 order=13
0/1 1
1/1 4/25
2/1 3314/625
3/1 -172232/15625
4/1 2536099/78125
5/1 -1034184364/9765625
6/1 64069351198/244140625
7/1 -3635150349352/6103515625
8/1 212172623155011/152587890625
9/1 -2261465069702616/762939453125
10/1 491082667968865538/95367431640625
11/1 -17291909688546080576/2384185791015625
12/1 501515259998762305004/59604644775390625
== rank=6 name=C45 order=13
0/1 1
1/1 153/50
2/1 3581/2500
3/1 8397/62500
4/1 7193779/1250000
5/1 -3241790199/156250000
6/1 -102108875889/7812500000
7/1 12405919349061/195312500000
8/1 3448498889721291/39062500000000
9/1 -19531005126126831/195312500000000
10/1 -66042687542312025919/48828125000000000
11/1 2951463228003450701163/1220703125000000000
12/1 559872718083081904996467/122070312500000000000
== rank=6 name=C11 order=13
0/1 1
1/1 -53/50
2/1 -157/625
3/1 -24081/25000
4/1 -2038307/312500
5/1 20444533391/156250000
6/1 -798055683019/1953125000
7/1 357224942196863/781250000000
8/1 -603755861602199/1953125000000
9/1 -68925721325792843/195312500000000
10/1 188992627956724605259/12207031250000000
11/1 -189746787078769839054801/2441406250000000000
12/1 5219449160317229208749741/30517578125000000000
== rank=6 name=C22 order=13
0/1 1
1/1 -64/25
2/1 4753/2500
3/1 -15344/3125
4/1 303612399/6250000
5/1 -845183548/9765625
6/1 -1002785046361/7812500000
7/1 2179824211714/6103515625
8/1 4917734779766831/7812500000000
9/1 -334521933275627/15258789062500
10/1 -574376093998872789063/48828125000000000
11/1 329111129334047147343/19073486328125000
12/1 5559702626773334250377891/122070312500000000000
== rank=6 name=C33 order=13
0/1 1
1/1 -54/25
2/1 -16767/2500
3/1 250307/6250
4/1 -120287943/3125000
5/1 -6205359537/39062500
6/1 7524919810133/15625000000
7/1 -64798911249597/195312500000
8/1 -187818683722317/3906250000000
9/1 -265170942707217527/244140625000000
10/1 -110533664528530907643/48828125000000000
11/1 19598441858441582371011/610351562500000000
12/1 -5197545465184890169272087/61035156250000000000
== rank=6 name=C44 order=13
0/1 1
1/1 -64/25
2/1 4753/2500
3/1 -15344/3125
4/1 303612399/6250000
5/1 -845183548/9765625
6/1 -1002785046361/7812500000
7/1 2179824211714/6103515625
8/1 4917734779766831/7812500000000
9/1 -334521933275627/15258789062500
10/1 -574376093998872789063/48828125000000000
11/1 329111129334047147343/19073486328125000
12/1 5559702626773334250377891/122070312500000000000
== rank=6 name=C55 order=13
0/1 1
1/1 -53/50
2/1 -157/625
3/1 -24081/25000
4/1 -2038307/312500
5/1 20444533391/156250000
6/1 -798055683019/1953125000
7/1 357224942196863/781250000000
8/1 -603755861602199/1953125000000
9/1 -68925721325792843/195312500000000
10/1 188992627956724605259/12207031250000000
11/1 -189746787078769839054801/2441406250000000000
12/1 5219449160317229208749741/30517578125000000000
"""
