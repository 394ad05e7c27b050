// Generated by tests/oracles/gen_vectors.py. Do not edit.
#pragma once
#include <string_view>
namespace oracle {
inline constexpr std::string_view kFieldA = "ba48eeaf867780b973f27d14f54bc95348048290ab5988c782407ea0bfd9a956";
inline constexpr std::string_view kFieldB = "9d009cd5aeee73cb4a2cd488007abd8b34b1e164654f89334a59390016e8233e";
inline constexpr std::string_view kFieldSum = "56498a853666f484bfc2539df221c98b77ddc1eb08d1d7c7841c1a77821ae020";
inline constexpr std::string_view kFieldDiff = "1d4852dad7880cee28c6a98bf4d10bc81353a02b460aff9338e744a0a9f18518";
inline constexpr std::string_view kFieldProd = "772853166a9fc4a4edf8602d8a91c65c285c3208f2974adfd39be3b444014b3a";
inline constexpr std::string_view kFieldInvA = "4f8df052de98df17acf9075ea0f1607b7f1e05669416901e8e5842b0d89bf459";
inline constexpr std::string_view kFieldAPow12345 = "596c4bfe34d41246403aaef5da3814aae8e76e6b8d6168dad7ac39e99ccea541";
inline constexpr std::string_view kFieldWideInput = "5818bcb570e1fe7ef4b9351d6f15e58a017dda875bdada7759f62601207f9cd948774d33b8f3c2a08617120a422ed85c17bcadbb2929ceea66c545900ef73e67";
inline constexpr std::string_view kFieldWideReduced = "44bfba6612d8ca6fb7ea182fe99f54af6596fb7234d2b36b84dd4fe00ebac130";
inline constexpr std::string_view kRoot32 = "2b0d9f431f972938b980228c508336b6b413c82219689bd0201fe8df9ea1a216";
inline constexpr std::string_view kRoot3 = "7a3f749733fd287200b71387c2218bb3e27cd770cd25068ce766fa03f6665734";
inline constexpr std::string_view kModulusLe = "01000000fffffffffe5bfeff02a4bd5305d8a10908d83933487d9d2953a7ed73";
inline constexpr std::string_view kG1Gen = "97f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55e83ff97a1aeffb3af00adb22c6bb";
inline constexpr std::string_view kG1Times5 = "b0e7791fb972fe014159aa33a98622da3cdc98ff707965e536d8636b5fcc5ac7a91a8c46e59a00dca575af0f18fb13dc";
inline constexpr std::string_view kG2Gen = "93e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049334cf11213945d57e5ac7d055d042b7e024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d1770bac0326a805bbefd48056c8c121bdb8";
inline constexpr std::string_view kSetupSeed = "oracle-seed";
inline constexpr std::string_view kSetupVk = "a8a3d7ceb18024d9f320121005552e2d00ac5c3c6c340b3779f178e47b18ba454522fbe12a258a665c633596e084acdc04818c987d1ef39d4ba8d70d097466debed460eb6631656feab30bdd9028d8722c5d407394126dbb5bb2c4fb9b986c2b";
inline constexpr std::string_view kSetupPower1 = "acc0547d2ad1e4c2d413734358a6e4aff29aa4a9bf7fb179d1eecc40206dd895e535529b09a502606c8fc8e076cdb41b";
inline constexpr std::string_view kSetupPower3 = "b283730a4577781520ad02ae96733db1e790bd81613dd0931646f325b70612a479ffb4bef40f050fb780d7b80d02fb84";
inline constexpr std::string_view kSetupLagrange2 = "81075ffe38f10e49dc69ae36a0931ebf68a8d7f61d16f438036610208dc742f5927b24b7c871135e795828e53385947a";
inline constexpr std::string_view kCommit5_7_11 = "ae1431acdeebf3439bcdc28fd523e6c2131467065bea5a7ff2ec094993b753efceddd2fb6196e4a97e9f9586a06ad101";
inline constexpr std::string_view kWitness5_7_11_at2 = "ad2e1a362313faf97f7c223c3599fc131625f3f21b82251510195edee2f068840d4322cf719ec9478b2c325fae979c8b";
inline constexpr std::string_view kHashCommitments = "e8e5d5303f0049680f145f25fe1f80843b96254ba55c5741cd104b61e0935e0d";
inline constexpr std::string_view kNode3PublicKey = "dfd77eddd6c872ff5d0d03cbbb5b55efa71883206182dc285ed0fa7f25a0f323";
inline constexpr std::string_view kNode3Receipt = "7a2abdf6c8aec6400d5b64d3558c3c80f2b88d19fa8d6148ac76449c2f4243959c786edc4d06443af5082e84d0ba70b5ab63da89ed78fcf4744210d54eed810d";
inline constexpr std::string_view kKeystreamSeed = "keystream";
inline constexpr std::string_view kKeystream1100 = "eb7bdc23a28624a412b3f2db5f05714258a33f29d7141ee5792373f686dc7a617ebf0e252524c02c616ba1de3513be94ebce45f46119692fa0dc1a99aff0c0798dc3869540a537acc214b2bbe2162884697a3869804d148e63abffcbeca9ba9c1f233778bbbc279e5e701936361182b25450a2a66604b203ed1c2ea5d5e16caa1efbcc06291fa9dbfbd82ff455949515053b2aa413bb24afb7c937b6deb12e615c9caa2dfbe1cac74c121636033fdf43e7ebb8fd8ac30cc578f24f96214bea13513457ee411cce818d6c8d21ee791c1416d7336839f5e3029055e0e332f07c5d64df70e4ad9b4dbae4cecef1f9dd8b7c8be98a49c9e5491405a66512ea4d1cd6ab36fe5bc67fbce5ec82bfa5cf8194109ea7dc1685e1ba28c09d4480a01058cf66cf67a173e78484f22d7e7debbfe6037f56a0878b405055daa7e30f4ce8993f8035e52f4efde1b8cbfd1fe193b96a07954eb54584b3201d0998ef3a911d02d712025b5734a6637a6eeab2250a1687c0bb6360da7257d918df5c73b313e0fee6c3848b9b7a4b627b5158caf2bad622e3df50bdd3623d13cbabcc6600c5c614c060e19a5883a6a39ea74c0f3d5a0e0856ea3cf32de0fcf5b03b0d5ec1c658bcbf5fbdaf1d87704d8ab86b53738687cf788e743ec8f28b196a796324ad553f931ab9ac0e9ed5586c037551758d111b88d91cfde3d831ae0ce2c57238302c89334ace8796bba4210c722f425f0d535a4b5b53494c088a3220736bd10b5025c276ac3ac6011d668c59bc5dde3d20a819098fa10cf29531996f84b2d41580e0abcd6b3e217e2292ba658d0d07ea688c868629d0fc60a5dc4221cc2e0730a95a5abbf9b2dcc8000540c6f6917ad878519ac0e99ba115de8e1e3aa5d74ca1b31721a5d3936e9bc2e779dc7ac4a6b6b7bc58a2a19f39152c0f9aad1f048a530030e041560f794f2de19205db7d5b2f5292df8a4479356c8819d1da270c3c55b6a4655df7c4b2c9fa26cef5b3cbbe0d02f4661a6f0f100277c07bd29bed6c0cbfd2959e25b9deb64896352452e16cfbd0440d0d1012800faa98f94b7a920f4f2615746f238020cbeea9af59158e41478abf48f185f53afe23f75d683ca2eca90b00bb3d1aa19297f8ca9424514e548e8964b8c84794fe06df7b22696bf42fd2cf9d1104966797d4f17496ac766975c8dfc07471bd95adbf4105980ea86a8aa6b626179401e2fa10b8b47418e2e4257d93130de7fddd5b014986ffe9f3c39d0ff7afd660a5d6241378e9b9a1b46a45a789aab06ff010bb76bca739802b3b8e04cfacb635d51a9cf1aa27dfe607d3d6df2a092636e5d5bed485285939ab4b2afd46b448f5e5b543dadf9da29bf4b6830a7fc4c94afc31a6e4750b2e3967d51eda069cf9886c48cef178950c3e4f5c700f517151c2db595360a51f8abc11a023dd1a188e71559e1ec84e86ee0f801a8ecf972336d504640436808e5a3ae809c9b824ffd4421315122f1d46637385cf2c1e596ab4e58c9489dd0d47a5a70d86a88f6ee05af7429d2cc0af841f2440a6d61093";
}  // namespace oracle
