// SPDX-License-Identifier: MIT
#include <cstdio>
int main() { std::puts("acceptance: placeholder"); return 1; }
