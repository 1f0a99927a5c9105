#include <iostream>

int main() {
    std::cout << "sdpcert placeholder\n";
    return 0;
}
