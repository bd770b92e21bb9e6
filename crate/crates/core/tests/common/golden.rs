// generated from the published listings; do not edit by hand

pub struct Listing {
    pub b0: &'static [&'static [i64]],
    pub steps: &'static [(&'static [&'static [i64]], &'static [&'static [i64]])],
    pub windows: &'static [(&'static str, &'static str)],
}

pub const QUAD2: Listing = Listing {
    b0: &[&[1,0],&[0,1]],
    steps: &[
        (&[&[1,1],&[0,1]], &[&[1,1],&[0,1]]),
        (&[&[0,-1],&[1,0]], &[&[1,-1],&[1,0]]),
        (&[&[1,-1],&[0,1]], &[&[1,-2],&[1,-1]]),
        (&[&[1,-1],&[0,1]], &[&[1,-3],&[1,-2]]),
        (&[&[0,-1],&[1,0]], &[&[-3,-1],&[-2,-1]]),
        (&[&[1,1],&[0,1]], &[&[-3,-4],&[-2,-3]]),
        (&[&[1,1],&[0,1]], &[&[-3,-7],&[-2,-5]]),
        (&[&[0,-1],&[1,0]], &[&[-7,3],&[-5,2]]),
    ],
    windows: &[
        ("0.69108", "1.44701"),
        ("1.44701", "2.96306"),
        ("1.96703", "4.02791"),
        ("4.02791", "8.43379"),
        ("8.43379", "17.27"),
        ("11.4647", "23.4764"),
        ("23.4764", "49.1557"),
        ("49.1557", "100.657"),
        ("66.8211", "136.83"),
    ],
};

pub const QUAD3: Listing = Listing {
    b0: &[&[1,0],&[0,1]],
    steps: &[
        (&[&[1,1],&[0,1]], &[&[1,1],&[0,1]]),
        (&[&[1,1],&[0,1]], &[&[1,2],&[0,1]]),
        (&[&[0,-1],&[1,1]], &[&[2,1],&[1,1]]),
        (&[&[1,1],&[0,1]], &[&[2,3],&[1,2]]),
        (&[&[1,1],&[0,1]], &[&[2,5],&[1,3]]),
        (&[&[1,1],&[0,1]], &[&[2,7],&[1,4]]),
        (&[&[0,-1],&[1,1]], &[&[7,5],&[4,3]]),
        (&[&[1,1],&[0,1]], &[&[7,12],&[4,7]]),
    ],
    windows: &[
        ("0.742955", "1.34598"),
        ("1.34598", "3.73205"),
        ("3.73205", "4.40807"),
        ("3.73205", "10.348"),
        ("10.348", "18.747"),
        ("18.747", "51.9808"),
        ("51.9808", "61.3965"),
        ("51.9808", "144.129"),
        ("144.129", "261.113"),
    ],
};

pub const CUBIC2: Listing = Listing {
    b0: &[&[1,0,0],&[0,1,0],&[0,0,1]],
    steps: &[
        (&[&[1,0,1],&[0,1,0],&[0,0,1]], &[&[1,0,1],&[0,1,0],&[0,0,1]]),
        (&[&[1,0,0],&[0,1,1],&[0,0,1]], &[&[1,0,1],&[0,1,1],&[0,0,1]]),
        (&[&[1,1,0],&[0,1,0],&[0,0,1]], &[&[1,1,1],&[0,1,1],&[0,0,1]]),
        (&[&[-1,0,0],&[0,0,-1],&[0,-1,0]], &[&[-1,-1,-1],&[0,-1,-1],&[0,-1,0]]),
        (&[&[0,-1,0],&[-1,0,0],&[0,0,-1]], &[&[1,1,1],&[1,0,1],&[1,0,0]]),
        (&[&[1,1,1],&[0,1,0],&[0,0,1]], &[&[1,2,2],&[1,1,2],&[1,1,1]]),
        (&[&[1,0,1],&[0,1,0],&[0,0,1]], &[&[1,2,3],&[1,1,3],&[1,1,2]]),
        (&[&[1,0,0],&[0,1,1],&[0,0,1]], &[&[1,2,5],&[1,1,4],&[1,1,3]]),
        (&[&[1,1,0],&[0,1,0],&[0,0,1]], &[&[1,3,5],&[1,2,4],&[1,2,3]]),
        (&[&[-1,0,0],&[0,0,-1],&[0,-1,0]], &[&[-1,-5,-3],&[-1,-4,-2],&[-1,-3,-2]]),
        (&[&[0,-1,0],&[-1,0,0],&[0,0,-1]], &[&[5,1,3],&[4,1,2],&[3,1,2]]),
        (&[&[1,1,1],&[0,1,0],&[0,0,1]], &[&[5,6,8],&[4,5,6],&[3,4,5]]),
        (&[&[1,0,1],&[0,1,0],&[0,0,1]], &[&[5,6,13],&[4,5,10],&[3,4,8]]),
        (&[&[1,0,0],&[0,1,1],&[0,0,1]], &[&[5,6,19],&[4,5,15],&[3,4,12]]),
    ],
    windows: &[
        ("0.410037", "1.09074"),
        ("1.09074", "1.2194"),
        ("1.2194", "1.83997"),
        ("1.83997", "2.1304"),
        ("2.05068", "2.67734"),
        ("2.05068", "3.09429"),
        ("3.09429", "8.23114"),
        ("8.23114", "9.20206"),
        ("9.20206", "13.8851"),
        ("13.8851", "16.0768"),
        ("15.4751", "20.2042"),
        ("15.4751", "23.3506"),
        ("23.3506", "62.1152"),
        ("62.1152", "69.4421"),
        ("69.4421", "104.782"),
    ],
};

pub const CUBIC3: Listing = Listing {
    b0: &[&[1,0,1],&[0,1,0],&[0,0,1]],
    steps: &[
        (&[&[1,0,0],&[0,1,1],&[0,0,1]], &[&[1,0,1],&[0,1,1],&[0,0,1]]),
        (&[&[1,1,0],&[0,1,0],&[0,0,1]], &[&[1,1,1],&[0,1,1],&[0,0,1]]),
        (&[&[1,0,1],&[0,1,0],&[0,0,1]], &[&[1,1,2],&[0,1,1],&[0,0,1]]),
        (&[&[-1,0,0],&[0,0,-1],&[0,-1,0]], &[&[-1,-2,-1],&[0,-1,-1],&[0,-1,0]]),
        (&[&[1,0,-1],&[0,1,1],&[0,0,1]], &[&[-1,-2,-2],&[0,-1,-2],&[0,-1,-1]]),
        (&[&[0,-1,0],&[-1,0,0],&[0,0,-1]], &[&[2,1,2],&[1,0,2],&[1,0,1]]),
        (&[&[1,-1,1],&[0,1,0],&[0,0,1]], &[&[2,-1,4],&[1,-1,3],&[1,-1,2]]),
        (&[&[-1,0,0],&[0,0,-1],&[0,-1,0]], &[&[-2,-4,1],&[-1,-3,1],&[-1,-2,1]]),
        (&[&[1,0,0],&[0,1,1],&[0,0,1]], &[&[-2,-4,-3],&[-1,-3,-2],&[-1,-2,-1]]),
        (&[&[0,-1,0],&[-1,0,0],&[0,0,-1]], &[&[4,2,3],&[3,1,2],&[2,1,1]]),
        (&[&[1,0,0],&[0,1,1],&[0,0,1]], &[&[4,2,5],&[3,1,3],&[2,1,2]]),
        (&[&[1,1,0],&[0,1,0],&[0,0,1]], &[&[4,6,5],&[3,4,3],&[2,3,2]]),
        (&[&[1,0,1],&[0,1,0],&[0,0,1]], &[&[4,6,9],&[3,4,6],&[2,3,4]]),
    ],
    windows: &[
        ("0.987248", "1.13841"),
        ("1.13841", "1.48185"),
        ("1.48185", "2.43748"),
        ("2.43748", "2.60848"),
        ("2.19262", "3.40016"),
        ("3.40016", "4.37887"),
        ("3.40016", "6.48864"),
        ("6.48864", "8.05221"),
        ("6.48864", "10.0621"),
        ("10.0621", "13.178"),
        ("10.0621", "14.8884"),
        ("14.8884", "19.3801"),
        ("19.3801", "20.1874"),
        ("20.1874", "43.5621"),
    ],
};

pub const QUARTIC2: Listing = Listing {
    b0: &[&[1,0,0,0],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1]],
    steps: &[
        (&[&[1,0,0,-1],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1]], &[&[1,0,0,-1],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1]]),
        (&[&[1,0,0,0],&[0,1,1,0],&[0,0,1,0],&[0,0,0,1]], &[&[1,0,0,-1],&[0,1,1,0],&[0,0,1,0],&[0,0,0,1]]),
        (&[&[1,1,1,0],&[0,1,0,-1],&[0,0,1,1],&[0,0,0,1]], &[&[1,1,1,-1],&[0,1,1,0],&[0,0,1,1],&[0,0,0,1]]),
        (&[&[0,0,1,0],&[0,0,0,1],&[-1,0,0,0],&[0,-1,0,0]], &[&[-1,1,1,1],&[-1,0,0,1],&[-1,-1,0,0],&[0,-1,0,0]]),
        (&[&[0,1,0,0],&[-1,0,0,0],&[0,0,0,1],&[0,0,-1,0]], &[&[-1,-1,-1,1],&[0,-1,-1,0],&[1,-1,0,0],&[1,0,0,0]]),
        (&[&[1,1,-1,0],&[0,1,0,1],&[0,0,1,1],&[0,0,0,1]], &[&[-1,-2,0,-1],&[0,-1,-1,-2],&[1,0,-1,-1],&[1,1,-1,0]]),
        (&[&[1,0,0,0],&[0,1,1,0],&[0,0,1,0],&[0,0,0,1]], &[&[-1,-2,-2,-1],&[0,-1,-2,-2],&[1,0,-1,-1],&[1,1,0,0]]),
        (&[&[1,0,0,-1],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1]], &[&[-1,-2,-2,0],&[0,-1,-2,-2],&[1,0,-1,-2],&[1,1,0,-1]]),
        (&[&[1,0,0,-1],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1]], &[&[-1,-2,-2,1],&[0,-1,-2,-2],&[1,0,-1,-3],&[1,1,0,-2]]),
        (&[&[1,0,0,0],&[0,1,1,0],&[0,0,1,0],&[0,0,0,1]], &[&[-1,-2,-4,1],&[0,-1,-3,-2],&[1,0,-1,-3],&[1,1,1,-2]]),
    ],
    windows: &[
        ("0.638754", "1.56555"),
        ("1.56555", "1.76879"),
        ("1.76879", "1.98329"),
        ("1.98329", "5.09586"),
        ("2.90629", "5.39623"),
        ("2.27056", "5.83395"),
        ("5.83395", "6.54145"),
        ("6.54145", "7.39065"),
        ("7.39065", "18.1141"),
        ("18.1141", "20.4656"),
        ("20.4656", "22.9475"),
    ],
};

pub const CHI2: Listing = Listing {
    b0: &[&[1,0,0,0],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1]],
    steps: &[
        (&[&[1,0,0,0],&[0,1,0,1],&[0,0,1,0],&[0,0,0,1]], &[&[1,0,0,0],&[0,1,0,1],&[0,0,1,0],&[0,0,0,1]]),
        (&[&[1,0,0,1],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1]], &[&[1,0,0,1],&[0,1,0,1],&[0,0,1,0],&[0,0,0,1]]),
        (&[&[1,0,0,0],&[0,1,0,0],&[0,0,1,1],&[0,0,0,1]], &[&[1,0,0,1],&[0,1,0,1],&[0,0,1,1],&[0,0,0,1]]),
        (&[&[1,0,0,0],&[0,1,1,0],&[0,0,1,0],&[0,0,0,1]], &[&[1,0,0,1],&[0,1,1,1],&[0,0,1,1],&[0,0,0,1]]),
        (&[&[1,1,1,0],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1]], &[&[1,1,1,1],&[0,1,1,1],&[0,0,1,1],&[0,0,0,1]]),
        (&[&[1,0,0,0],&[0,-1,0,0],&[0,0,0,-1],&[0,0,-1,0]], &[&[1,-1,-1,-1],&[0,-1,-1,-1],&[0,0,-1,-1],&[0,0,-1,0]]),
        (&[&[1,0,0,1],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1]], &[&[1,-1,-1,0],&[0,-1,-1,-1],&[0,0,-1,-1],&[0,0,-1,0]]),
        (&[&[1,0,0,0],&[0,0,-1,0],&[0,-1,0,0],&[0,0,0,-1]], &[&[1,1,1,0],&[0,1,1,1],&[0,1,0,1],&[0,1,0,0]]),
        (&[&[0,-1,0,0],&[1,0,0,0],&[0,0,-1,0],&[0,0,0,-1]], &[&[1,-1,-1,0],&[1,0,-1,-1],&[1,0,0,-1],&[1,0,0,0]]),
        (&[&[1,-1,0,0],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1]], &[&[1,-2,-1,0],&[1,-1,-1,-1],&[1,-1,0,-1],&[1,-1,0,0]]),
        (&[&[1,-1,0,0],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1]], &[&[1,-3,-1,0],&[1,-2,-1,-1],&[1,-2,0,-1],&[1,-2,0,0]]),
        (&[&[1,0,0,0],&[0,1,0,1],&[0,0,1,0],&[0,0,0,1]], &[&[1,-3,-1,-3],&[1,-2,-1,-3],&[1,-2,0,-3],&[1,-2,0,-2]]),
        (&[&[1,0,0,0],&[0,1,1,-1],&[0,0,1,0],&[0,0,0,1]], &[&[1,-3,-4,0],&[1,-2,-3,-1],&[1,-2,-2,-1],&[1,-2,-2,0]]),
        (&[&[0,1,0,0],&[-1,0,0,0],&[0,0,-1,0],&[0,0,0,-1]], &[&[3,1,4,0],&[2,1,3,1],&[2,1,2,1],&[2,1,2,0]]),
        (&[&[1,0,0,0],&[0,0,-1,0],&[0,-1,0,0],&[0,0,0,-1]], &[&[3,-4,-1,0],&[2,-3,-1,-1],&[2,-2,-1,-1],&[2,-2,-1,0]]),
        (&[&[1,0,0,0],&[0,1,0,1],&[0,0,1,0],&[0,0,0,1]], &[&[3,-4,-1,-4],&[2,-3,-1,-4],&[2,-2,-1,-3],&[2,-2,-1,-2]]),
        (&[&[1,0,0,0],&[0,-1,0,0],&[0,0,0,-1],&[0,0,-1,0]], &[&[3,4,4,1],&[2,3,4,1],&[2,2,3,1],&[2,2,2,1]]),
        (&[&[1,0,0,0],&[0,1,0,0],&[0,0,1,1],&[0,0,0,1]], &[&[3,4,4,5],&[2,3,4,5],&[2,2,3,4],&[2,2,2,3]]),
        (&[&[1,0,0,1],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1]], &[&[3,4,4,8],&[2,3,4,7],&[2,2,3,6],&[2,2,2,5]]),
        (&[&[1,0,0,0],&[0,1,0,-1],&[0,0,1,0],&[0,0,0,1]], &[&[3,4,4,4],&[2,3,4,4],&[2,2,3,4],&[2,2,2,3]]),
        (&[&[1,0,0,0],&[0,1,0,1],&[0,0,1,0],&[0,0,0,1]], &[&[3,4,4,8],&[2,3,4,7],&[2,2,3,6],&[2,2,2,5]]),
    ],
    windows: &[
        ("0.858498", "1.16483"),
        ("1.16483", "1.25962"),
        ("1.25962", "1.40348"),
        ("1.40348", "1.64805"),
        ("1.64805", "1.89353"),
        ("1.89353", "1.953"),
        ("1.89353", "2.21428"),
        ("2.21428", "2.28296"),
        ("2.21428", "2.43997"),
        ("2.21428", "2.51163"),
        ("2.51163", "4.60674"),
        ("4.60674", "5.22538"),
        ("5.22538", "6.03036"),
        ("6.03036", "6.18809"),
        ("6.03036", "6.87183"),
        ("6.1105", "7.40949"),
        ("7.40949", "7.9813"),
        ("7.02068", "8.24409"),
        ("8.24409", "9.18562"),
        ("9.18562", "9.93319"),
        ("9.93319", "13.4775"),
        ("13.4775", "14.5744"),
    ],
};

